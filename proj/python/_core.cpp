#include "kkv/checks.hpp"
#include "kkv/nl_correspondence.hpp"
#include "kkv/pairs_mnop.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace kkv;

namespace {

// Exact values cross the boundary as fractions.Fraction / int.
py::object to_py(const Rational& r)
{
    // Leaked on purpose: must outlive interpreter finalization.
    static const auto* fraction = new py::object(py::module_::import("fractions").attr("Fraction"));
    return (*fraction)(py::int_(py::str(r.get_num().get_str())), py::int_(py::str(r.get_den().get_str())));
}

py::int_ to_py(const Integer& z) { return py::int_(py::str(z.get_str())); }

Rational from_py(const py::handle& value)
{
    if (py::isinstance<py::float_>(value)) {
        throw DomainError("floats are not accepted; pass int or fractions.Fraction");
    }
    return parse_rational(py::str(value).cast<std::string>());
}

py::list to_py(std::span<const Rational> values)
{
    py::list out;
    for (const auto& v : values) {
        out.append(to_py(v));
    }
    return out;
}

Polynomial poly_from_py(const py::sequence& coeffs)
{
    std::vector<Rational> c;
    for (const auto& x : coeffs) {
        c.push_back(from_py(x));
    }
    return Polynomial(std::move(c));
}

RationalFunction ratfn_from_py(const py::sequence& num, const py::sequence& den)
{
    return RationalFunction(poly_from_py(num), poly_from_py(den));
}

// (min_degree, [coefficients]) with the order implied by the length.
py::tuple series_to_py(const RationalSeries& s)
{
    return py::make_tuple(s.min_degree(), to_py(s.coefficients()));
}

py::tuple ratfn_to_py(const RationalFunction& r)
{
    return py::make_tuple(to_py(r.numerator().coefficients()), to_py(r.denominator().coefficients()));
}

BpsTable table_from_py(const py::dict& entries)
{
    BpsTable t;
    for (const auto& [key, value] : entries) {
        const auto gd = key.cast<std::pair<int, int>>();
        t.set(gd.first, gd.second, from_py(value));
    }
    return t;
}

py::list grid_rows(const KkvBpsGrid& grid)
{
    py::list rows;
    for (int g = 0; g <= grid.bound(); ++g) {
        py::list row;
        for (int h = 0; h <= grid.bound(); ++h) {
            row.append(to_py(grid.at(g, h)));
        }
        rows.append(row);
    }
    return rows;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "exact K3 curve counting kernels";

    py::register_exception<Error>(m, "KkvError", PyExc_ValueError);

    m.def("kkv_table", [](int h_max) { return grid_rows(bps_grid_from_kkv(h_max)); }, py::arg("h_max"),
          "rows[g][h] = n_{g,h} for g, h <= h_max");

    m.def(
        "yau_zaslow",
        [](int h_max) {
            const RationalSeries s = yau_zaslow_series(h_max);
            py::list out;
            for (int h = 0; h <= h_max; ++h) {
                out.append(to_py(to_integer(s.coefficient(h))));
            }
            return out;
        },
        py::arg("h_max"));

    m.def("sine_bracket", [](int d, int genus, int order) { return series_to_py(sine_bracket(d, genus, order)); },
          py::arg("d"), py::arg("genus"), py::arg("order"));

    m.def(
        "gw_from_bps",
        [](const py::dict& table, int d_max, int u_order) {
            const GwPotential pot = gw_from_bps(table_from_py(table), d_max, u_order);
            py::dict out;
            for (int d = 1; d <= d_max; ++d) {
                for (int g = 0; g <= pot.max_genus(); ++g) {
                    out[py::make_tuple(g, d)] = to_py(pot.at(g, d));
                }
            }
            return out;
        },
        py::arg("table"), py::arg("d_max"), py::arg("u_order"));

    m.def(
        "bps_from_gw",
        [](const py::dict& potential, int d_max, int u_order) {
            GwPotential pot(d_max, u_order);
            for (const auto& [key, value] : potential) {
                const auto gd = key.cast<std::pair<int, int>>();
                pot.set(gd.first, gd.second, from_py(value));
            }
            py::dict out;
            const BpsTable table = bps_from_gw(pot, d_max);
            for (const auto& [key, value] : table.entries()) {
                out[py::make_tuple(key.first, key.second)] = to_py(value);
            }
            return out;
        },
        py::arg("potential"), py::arg("d_max"), py::arg("u_order"));

    m.def(
        "pairs",
        [](int d, int h) {
            const HodgeLabel label{d, h};
            return ratfn_to_py(multiple_cover(label, bps_grid_from_kkv(label.required_grid_bound())));
        },
        py::arg("d"), py::arg("h"), "(numerator, denominator) of the connected pairs series of d*beta");

    m.def(
        "expand",
        [](const py::sequence& num, const py::sequence& den, int order) {
            return series_to_py(ratfn_expand(ratfn_from_py(num, den), order));
        },
        py::arg("numerator"), py::arg("denominator"), py::arg("order"));

    m.def(
        "is_q_inversion_symmetric",
        [](const py::sequence& num, const py::sequence& den) {
            return check_q_inversion_symmetry(ratfn_from_py(num, den));
        },
        py::arg("numerator"), py::arg("denominator"));

    m.def(
        "substitute_q_minus_exp",
        [](const py::sequence& num, const py::sequence& den, int u_order) {
            return series_to_py(substitute_q_minus_exp(ratfn_from_py(num, den), u_order));
        },
        py::arg("numerator"), py::arg("denominator"), py::arg("u_order"));

    m.def(
        "mnop_check",
        [](int d, int h, int u_order) {
            const HodgeLabel label{d, h};
            const MnopReport r = mnop_check(label, bps_grid_from_kkv(label.required_grid_bound()), u_order);
            py::dict out;
            out["equal"] = r.equal;
            out["first_mismatch"] = r.first_mismatch ? py::object(py::int_(*r.first_mismatch)) : py::none();
            out["gw"] = series_to_py(r.gw_side);
            out["pairs"] = series_to_py(r.pairs_side);
            return out;
        },
        py::arg("d"), py::arg("h"), py::arg("u_order") = 12);

    m.def(
        "run_checks",
        [](int h_max, int d_max, int u_order, std::uint64_t seed, int cases) {
            CheckOptions opt;
            opt.h_max = h_max;
            opt.d_max = d_max;
            opt.u_order = u_order;
            opt.seed = seed;
            opt.cases = cases;
            py::list out;
            for (const auto& r : run_checks(opt)) {
                py::dict d;
                d["name"] = r.name;
                d["passed"] = r.passed;
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("h_max") = 20, py::arg("d_max") = 3, py::arg("u_order") = 12, py::arg("seed") = 20140101,
        py::arg("cases") = 100);
}
