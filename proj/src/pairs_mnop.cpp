#include "kkv/pairs_mnop.hpp"

#include "kkv/errors.hpp"

#include <algorithm>
#include <string>

namespace kkv {

namespace {

std::string label_string(const HodgeLabel& l)
{
    return "(d=" + std::to_string(l.d) + ", h=" + std::to_string(l.h) + ")";
}

// Horner evaluation of p at a series argument.
GaussianSeries evaluate_at(const Polynomial& p, const GaussianSeries& x, int order)
{
    auto acc = GaussianSeries::zero(Variable::u, order);
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * x + GaussianSeries::constant(Variable::u, GaussianRational(p.coefficient(k)), order);
    }
    return acc;
}

} // namespace

int HodgeLabel::h_of(int k) const
{
    if (k < 1 || d % k != 0) {
        throw DomainError(std::to_string(k) + " does not divide d in " + label_string(*this));
    }
    const int m = d / k;
    return m * m * (h - 1) + 1;
}

int HodgeLabel::required_grid_bound() const
{
    int out = 0;
    for (int k = 1; k <= d; ++k) {
        if (d % k == 0) {
            out = std::max(out, h_of(k));
        }
    }
    return out;
}

RationalFunction primitive_pairs_ratfn(int h, const KkvBpsGrid& grid)
{
    if (h > grid.bound()) {
        throw TruncationError("primitive_pairs_ratfn: h = " + std::to_string(h) + " outside grid bound " +
                              std::to_string(grid.bound()));
    }
    if (h < 0) {
        return RationalFunction{};
    }
    // Over the common denominator q^H (1+q)^2 with H = max(h-1, 0), the genus-g
    // term n_g q^(1-g) (1+q)^(2g-2) becomes n_g q^(1-g+H) (1+q)^(2g).
    const int shift = std::max(h - 1, 0);
    Polynomial num;
    for (int g = 0; g <= h; ++g) {
        const Integer n = grid.at(g, h);
        if (sgn(n) == 0) {
            continue;
        }
        num += (Polynomial::one_plus_q_pow(static_cast<unsigned>(2 * g)) * Rational(n)).shifted(1 - g + shift);
    }
    const Polynomial den = Polynomial::one_plus_q_pow(2).shifted(shift);
    return RationalFunction(std::move(num), den);
}

RationalFunction multiple_cover(const HodgeLabel& label, const KkvBpsGrid& grid)
{
    if (label.d < 1) {
        throw DomainError("multiple_cover needs d >= 1");
    }
    RationalFunction out;
    for (int k = 1; k <= label.d; ++k) {
        if (label.d % k != 0) {
            continue;
        }
        const RationalFunction primitive = primitive_pairs_ratfn(label.h_of(k), grid);
        // q -> -(-q)^k = (-1)^(k+1) q^k
        const Rational sign(k % 2 == 1 ? 1 : -1);
        out += primitive.substitute_monomial(sign, k) * Rational(1, k);
    }
    return out;
}

RationalSeries substitute_q_minus_exp(const RationalFunction& r, int u_order)
{
    if (r.is_zero()) {
        return RationalSeries::zero(Variable::u, u_order);
    }
    // The only pole on the path q = -e^{iu}, u -> 0 is at q = -1.
    const int pole = r.denominator().root_multiplicity(Rational(-1));
    if (r.numerator().root_multiplicity(Rational(-1)) > 0 && pole > 0) {
        throw DomainError("internal error: rational function not in lowest terms");
    }
    // D(-e^{iu}) has valuation `pole`; inverting it costs 2*pole orders.
    const int work = u_order + 2 * pole;
    std::vector<GaussianRational> minus_exp;
    minus_exp.reserve(static_cast<std::size_t>(work) + 1);
    const GaussianRational i = GaussianRational::i();
    GaussianRational i_pow(1);
    for (int k = 0; k <= work; ++k) {
        const Rational inv_factorial(Integer(1), factorial(static_cast<unsigned long>(k)));
        minus_exp.push_back(-(i_pow * inv_factorial));
        i_pow *= i;
    }
    const GaussianSeries q(Variable::u, 0, std::move(minus_exp));
    const GaussianSeries num = evaluate_at(r.numerator(), q, work);
    const GaussianSeries den = evaluate_at(r.denominator(), q, work);
    const GaussianSeries value = num * series_inverse(den);
    if (value.order() < u_order) {
        throw TruncationError("internal error: q = -e^{iu} substitution lost precision");
    }
    std::vector<Rational> real;
    const int lo = value.min_degree();
    for (int k = lo; k <= u_order; ++k) {
        const GaussianRational c = value.coefficient(k);
        if (!c.is_real()) {
            throw NonRealSubstitution("q = -e^{iu}: imaginary coefficient at u^" + std::to_string(k), k);
        }
        if (k % 2 != 0 && sgn(c.real()) != 0) {
            throw NonRealSubstitution("q = -e^{iu}: odd coefficient at u^" + std::to_string(k), k);
        }
        real.push_back(c.real());
    }
    return RationalSeries(Variable::u, lo, std::move(real), u_order);
}

BpsTable kkv_bps_table(const KkvBpsGrid& grid, int h, int d_max)
{
    BpsTable table;
    for (int grade = 1; grade <= d_max; ++grade) {
        const int h_grade = grade * grade * (h - 1) + 1;
        table.set_square(grade, h_grade);
        if (h_grade < 0) {
            continue;
        }
        for (int g = 0; g <= h_grade; ++g) {
            table.set(g, grade, Rational(grid.at(g, h_grade)));
        }
    }
    return table;
}

RationalSeries gw_connected_series(const HodgeLabel& label, const KkvBpsGrid& grid, int u_order)
{
    const BpsTable table = kkv_bps_table(grid, label.h, label.d);
    return gw_series(table, label.d, u_order);
}

MnopReport mnop_check(const HodgeLabel& label, const KkvBpsGrid& grid, int u_order)
{
    RationalSeries gw = gw_connected_series(label, grid, u_order);
    RationalSeries pairs = substitute_q_minus_exp(multiple_cover(label, grid), u_order);
    auto mismatch = first_mismatch(gw, pairs);
    const bool equal = !mismatch && gw.order() == pairs.order();
    return MnopReport{equal, mismatch, std::move(gw), std::move(pairs)};
}

void PairsLedger::insert_primitive(int h, RationalFunction r)
{
    if (!check_q_inversion_symmetry(r)) {
        throw DomainError("primitive pairs function for h=" + std::to_string(h) + " is not q <-> 1/q symmetric");
    }
    primitive_.insert_or_assign(h, std::move(r));
}

void PairsLedger::insert_imprimitive(const HodgeLabel& label, RationalFunction r)
{
    if (!check_q_inversion_symmetry(r)) {
        throw DomainError("pairs function for " + label_string(label) + " is not q <-> 1/q symmetric");
    }
    imprimitive_.insert_or_assign(std::make_pair(label.d, label.h), std::move(r));
}

const RationalFunction& PairsLedger::primitive(int h) const
{
    auto it = primitive_.find(h);
    if (it == primitive_.end()) {
        throw TruncationError("pairs ledger has no primitive entry for h=" + std::to_string(h));
    }
    return it->second;
}

const RationalFunction& PairsLedger::imprimitive(const HodgeLabel& label) const
{
    auto it = imprimitive_.find({label.d, label.h});
    if (it == imprimitive_.end()) {
        throw TruncationError("pairs ledger has no entry for " + label_string(label));
    }
    return it->second;
}

PairsLedger build_pairs_ledger(const KkvBpsGrid& grid, int h_max, int d_max)
{
    PairsLedger ledger;
    for (int h = 0; h <= h_max; ++h) {
        ledger.insert_primitive(h, primitive_pairs_ratfn(h, grid));
        for (int d = 1; d <= d_max; ++d) {
            const HodgeLabel label{d, h};
            ledger.insert_imprimitive(label, multiple_cover(label, grid));
        }
    }
    return ledger;
}

GradedSeries<RationalFunction> connected_pairs_ledger(const KkvBpsGrid& grid, int h, int d_max)
{
    if (d_max < 1) {
        throw DomainError("connected ledger needs d_max >= 1");
    }
    std::vector<RationalFunction> grades;
    grades.reserve(static_cast<std::size_t>(d_max));
    for (int d = 1; d <= d_max; ++d) {
        grades.push_back(multiple_cover(HodgeLabel{d, h}, grid));
    }
    return GradedSeries<RationalFunction>(std::move(grades));
}

GradedSeries<RationalFunction> disconnected_partition(const KkvBpsGrid& grid, int h, int d_max)
{
    return series_exp(connected_pairs_ledger(grid, h, d_max));
}

} // namespace kkv
