#include "kkv/serialize.hpp"

#include "kkv/errors.hpp"

#include <sstream>

namespace kkv {

namespace {

Json rational_list(std::span<const Rational> values)
{
    Json out = Json::array();
    for (const auto& v : values) {
        out.push_back(to_string(v));
    }
    return out;
}

std::vector<Rational> rationals_from(const Json& j)
{
    if (!j.is_array()) {
        throw DomainError("expected a JSON array of rationals");
    }
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& e : j) {
        out.push_back(rational_from_json(e));
    }
    return out;
}

void require_kind(const Json& j, const char* kind)
{
    if (!j.is_object() || j.value("kind", std::string{}) != kind) {
        throw DomainError(std::string("expected a JSON object of kind '") + kind + "'");
    }
}

} // namespace

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j)
{
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    throw DomainError("rationals are encoded as strings \"n\" or \"n/d\"");
}

Json to_json(const RationalSeries& s)
{
    return Json{{"variable", to_string(s.variable())},
                {"min_degree", s.min_degree()},
                {"order", s.order()},
                {"coefficients", rational_list(s.coefficients())}};
}

RationalSeries series_from_json(const Json& j)
{
    const Variable var = parse_variable(j.at("variable").get<std::string>());
    const int min_degree = j.at("min_degree").get<int>();
    std::vector<Rational> coeffs = rationals_from(j.at("coefficients"));
    if (j.contains("order")) {
        const int order = j.at("order").get<int>();
        if (order != min_degree + static_cast<int>(coeffs.size()) - 1) {
            throw DomainError("series JSON: order does not match coefficient count");
        }
    }
    return RationalSeries(var, min_degree, std::move(coeffs));
}

Json to_json(const RationalFunction& r)
{
    return Json{{"numerator", rational_list(r.numerator().coefficients())},
                {"denominator", rational_list(r.denominator().coefficients())}};
}

RationalFunction ratfn_from_json(const Json& j)
{
    return RationalFunction(Polynomial(rationals_from(j.at("numerator"))),
                            Polynomial(rationals_from(j.at("denominator"))));
}

Json to_json(const SymLaurentPoly& p)
{
    const int d = p.degree();
    Json coeffs = Json::array();
    for (int k = -d; k <= d; ++k) {
        coeffs.push_back(to_string(p.coefficient(k)));
    }
    return Json{{"variable", "z"}, {"min_degree", d < 0 ? 0 : -d}, {"coefficients", coeffs}};
}

Json to_json(const KkvBpsGrid& grid)
{
    Json rows = Json::array();
    for (int g = 0; g <= grid.bound(); ++g) {
        Json row = Json::array();
        for (int h = 0; h <= grid.bound(); ++h) {
            row.push_back(to_string(grid.at(g, h)));
        }
        rows.push_back(std::move(row));
    }
    return Json{{"kind", "kkv_bps_grid"}, {"h_max", grid.bound()}, {"rows", rows}};
}

KkvBpsGrid grid_from_json(const Json& j)
{
    require_kind(j, "kkv_bps_grid");
    const int bound = j.at("h_max").get<int>();
    const Json& rows = j.at("rows");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(bound) + 1) {
        throw DomainError("grid JSON: expected h_max + 1 rows");
    }
    std::vector<std::vector<Integer>> by_h(static_cast<std::size_t>(bound) + 1);
    for (int h = 0; h <= bound; ++h) {
        for (int g = 0; g <= h; ++g) {
            by_h[static_cast<std::size_t>(h)].push_back(
                to_integer(rational_from_json(rows.at(static_cast<std::size_t>(g)).at(static_cast<std::size_t>(h)))));
        }
    }
    return KkvBpsGrid(bound, std::move(by_h));
}

Json to_json(const BpsTable& table)
{
    Json entries = Json::array();
    for (const auto& [key, value] : table.entries()) {
        entries.push_back(Json{{"g", key.first}, {"d", key.second}, {"value", to_string(value)}});
    }
    Json squares = Json::object();
    for (int d = 1; d <= table.max_grade(); ++d) {
        if (auto h = table.square(d)) {
            squares[std::to_string(d)] = *h;
        }
    }
    return Json{{"kind", "bps_table"}, {"entries", entries}, {"squares", squares}, {"integral", table.is_integral()}};
}

BpsTable bps_table_from_json(const Json& j)
{
    require_kind(j, "bps_table");
    BpsTable table;
    for (const auto& e : j.at("entries")) {
        table.set(e.at("g").get<int>(), e.at("d").get<int>(), rational_from_json(e.at("value")));
    }
    if (j.contains("squares")) {
        for (const auto& [d, h] : j.at("squares").items()) {
            table.set_square(std::stoi(d), h.get<int>());
        }
    }
    return table;
}

Json to_json(const GwPotential& pot)
{
    Json entries = Json::array();
    for (int d = 1; d <= pot.d_max(); ++d) {
        for (int g = 0; g <= pot.max_genus(); ++g) {
            entries.push_back(Json{{"g", g}, {"d", d}, {"value", to_string(pot.at(g, d))}});
        }
    }
    return Json{{"kind", "gw_potential"}, {"d_max", pot.d_max()}, {"u_order", pot.u_order()}, {"entries", entries}};
}

GwPotential gw_potential_from_json(const Json& j)
{
    require_kind(j, "gw_potential");
    GwPotential pot(j.at("d_max").get<int>(), j.at("u_order").get<int>());
    for (const auto& e : j.at("entries")) {
        pot.set(e.at("g").get<int>(), e.at("d").get<int>(), rational_from_json(e.at("value")));
    }
    return pot;
}

Json to_json(const ClassLabel& label) { return Json{{"m", label.m}, {"h", label.h}}; }

ClassLabel class_label_from_json(const Json& j) { return ClassLabel{j.at("m").get<int>(), j.at("h").get<int>()}; }

Json to_json(const NlMatrix& nl)
{
    Json rows = Json::array();
    for (const auto& r : nl.rows()) {
        rows.push_back(r.name);
    }
    Json cols = Json::array();
    for (const auto& c : nl.cols()) {
        cols.push_back(to_json(c));
    }
    Json entries = Json::array();
    for (std::size_t r = 0; r < nl.rows().size(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < nl.cols().size(); ++c) {
            row.push_back(to_string(nl.at(r, c)));
        }
        entries.push_back(std::move(row));
    }
    return Json{{"kind", "nl_matrix"}, {"rows", rows}, {"cols", cols}, {"entries", entries}};
}

NlMatrix nl_matrix_from_json(const Json& j)
{
    require_kind(j, "nl_matrix");
    std::vector<FibreClass> rows;
    for (const auto& r : j.at("rows")) {
        rows.push_back(FibreClass{r.get<std::string>()});
    }
    std::vector<ClassLabel> cols;
    for (const auto& c : j.at("cols")) {
        cols.push_back(class_label_from_json(c));
    }
    std::vector<Rational> entries;
    for (const auto& row : j.at("entries")) {
        if (row.size() != cols.size()) {
            throw DomainError("NL matrix JSON: ragged row");
        }
        for (const auto& e : row) {
            entries.push_back(rational_from_json(e));
        }
    }
    return NlMatrix(std::move(rows), std::move(cols), std::move(entries));
}

Json to_json(const MnopReport& report)
{
    Json out{{"equal", report.equal}, {"gw_side", to_json(report.gw_side)}, {"pairs_side", to_json(report.pairs_side)}};
    out["first_mismatch"] = report.first_mismatch ? Json(*report.first_mismatch) : Json(nullptr);
    return out;
}

Json to_json(const TransferReport& report)
{
    Json out{{"consistent", report.consistent}, {"reason", report.reason}};
    out["failing"] = report.failing ? to_json(*report.failing) : Json(nullptr);
    out["degree"] = report.degree ? Json(*report.degree) : Json(nullptr);
    return out;
}

std::string grid_to_csv(const KkvBpsGrid& grid)
{
    std::ostringstream os;
    os << "g";
    for (int h = 0; h <= grid.bound(); ++h) {
        os << ",h=" << h;
    }
    os << "\n";
    for (int g = 0; g <= grid.bound(); ++g) {
        os << g;
        for (int h = 0; h <= grid.bound(); ++h) {
            os << "," << grid.at(g, h);
        }
        os << "\n";
    }
    return os.str();
}

} // namespace kkv
