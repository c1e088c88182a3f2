#include "kkv/pairs_mnop.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace kkv;

namespace {

RationalFunction q_over_one_plus_q_squared(const Rational& c = Rational(1), int k = 1)
{
    // c q^k / (1 + c q^k)^2
    const Polynomial x = Polynomial::monomial(c, k);
    return RationalFunction(x, (Polynomial(1) + x) * (Polynomial(1) + x));
}

const KkvBpsGrid& grid()
{
    static const KkvBpsGrid g = bps_grid_from_kkv(HodgeLabel{4, 5}.required_grid_bound());
    return g;
}

} // namespace

TEST_CASE("h_of")
{
    const HodgeLabel l{2, 3};
    CHECK(l.h_of(1) == 9);
    CHECK(l.h_of(2) == 3);
    CHECK(HodgeLabel{2, 0}.h_of(1) == -3);
    CHECK_THROWS_AS(l.h_of(3), DomainError);
    CHECK(HodgeLabel{3, 2}.required_grid_bound() == 10);
    CHECK(HodgeLabel{3, 0}.required_grid_bound() == 0);
}

TEST_CASE("primitive pairs functions")
{
    CHECK(primitive_pairs_ratfn(0, grid()) == q_over_one_plus_q_squared());
    CHECK(primitive_pairs_ratfn(1, grid()) == q_over_one_plus_q_squared() * Rational(24) - RationalFunction(2));
    CHECK(primitive_pairs_ratfn(-3, grid()).is_zero());
    CHECK_THROWS_AS(primitive_pairs_ratfn(5, bps_grid_from_kkv(4)), TruncationError);
}

TEST_CASE("primitive pairs function against the term-by-term sum")
{
    // sum_g n_{g,h} q^(1-g) (1+q)^(2g-2), one rational function per genus.
    for (int h = 0; h <= 6; ++h) {
        RationalFunction want;
        for (int g = 0; g <= h; ++g) {
            const RationalFunction term =
                RationalFunction::monomial(Rational(grid().at(g, h)), 1 - g) *
                RationalFunction(Polynomial::one_plus_q_pow(static_cast<unsigned>(2 * g)), Polynomial::one_plus_q_pow(2));
            want += term;
        }
        CHECK(primitive_pairs_ratfn(h, grid()) == want);
    }
}

TEST_CASE("multiple cover formula in small cases")
{
    // d = 2, h = 0: only k = 2 contributes, (1/2) P_0(-q^2).
    CHECK(multiple_cover(HodgeLabel{2, 0}, grid()) == q_over_one_plus_q_squared(Rational(-1), 2) * make_rational(1, 2));
    // d = 2, h = 1: every multiple has square 0.
    const RationalFunction p1 = primitive_pairs_ratfn(1, grid());
    CHECK(multiple_cover(HodgeLabel{2, 1}, grid()) ==
          p1 + p1.substitute_monomial(Rational(-1), 2) * make_rational(1, 2));
    // d = 3, h = 1: k in {1, 3} and q -> q^3 for k = 3.
    CHECK(multiple_cover(HodgeLabel{3, 1}, grid()) ==
          p1 + p1.substitute_monomial(Rational(1), 3) * make_rational(1, 3));
    CHECK_THROWS_AS(multiple_cover(HodgeLabel{0, 1}, grid()), DomainError);
}

TEST_CASE("every multiple-cover function is q <-> 1/q symmetric")
{
    for (int h = 0; h <= 5; ++h) {
        for (int d = 1; d <= 4; ++d) {
            CHECK(check_q_inversion_symmetry(multiple_cover(HodgeLabel{d, h}, grid())));
        }
    }
}

TEST_CASE("q = -e^{iu} on q/(1+q)^2 is the genus-zero sine bracket")
{
    const RationalSeries s = substitute_q_minus_exp(q_over_one_plus_q_squared(), 12);
    CHECK(s == sine_bracket(1, 0, 12));
    CHECK(s.coefficient(-2) == 1);
    CHECK(s.coefficient(0) == make_rational(1, 12));
    CHECK(s.coefficient(2) == make_rational(1, 240));
}

TEST_CASE("q + 1/q becomes -2 cos u")
{
    const RationalFunction r = RationalFunction::monomial(Rational(1), 1) + RationalFunction::monomial(Rational(1), -1);
    CHECK(substitute_q_minus_exp(r, 12) == oracle::cos_series(1, 12) * Rational(-2));
}

TEST_CASE("asymmetric functions do not substitute to real even series")
{
    CHECK_THROWS_AS(substitute_q_minus_exp(RationalFunction::monomial(Rational(1), 1), 6), NonRealSubstitution);
    try {
        substitute_q_minus_exp(RationalFunction::monomial(Rational(1), 1), 6);
    } catch (const NonRealSubstitution& e) {
        CHECK(e.degree() == 1);
    }
    CHECK(substitute_q_minus_exp(RationalFunction(), 6).is_zero());
}

TEST_CASE("local MNOP identity for d <= 3, h <= 3")
{
    for (int d = 1; d <= 3; ++d) {
        for (int h = 0; h <= 3; ++h) {
            const MnopReport r = mnop_check(HodgeLabel{d, h}, grid(), 12);
            CHECK_MESSAGE(r.equal, "d=" << d << " h=" << h);
            CHECK_FALSE(r.first_mismatch);
            CHECK(r.gw_side.order() == 12);
        }
    }
}

TEST_CASE("local MNOP identity at higher order for d = 4")
{
    for (int h = 0; h <= 2; ++h) {
        CHECK(mnop_check(HodgeLabel{4, h}, grid(), 16).equal);
    }
}

TEST_CASE("a perturbed pairs side is caught at the right degree")
{
    const HodgeLabel label{2, 1};
    const RationalSeries gw = gw_connected_series(label, grid(), 12);
    // q^2 + q^-2 -> 2 cos 2u, whose first nonzero term is the constant 2.
    const RationalFunction bump = RationalFunction::monomial(Rational(1), 2) + RationalFunction::monomial(Rational(1), -2);
    const RationalSeries pairs = substitute_q_minus_exp(multiple_cover(label, grid()) + bump, 12);
    CHECK(first_mismatch(gw, pairs) == 0);
}

TEST_CASE("BPS table by square")
{
    const BpsTable t = kkv_bps_table(grid(), 1, 3);
    CHECK(t.at(0, 1) == 24);
    CHECK(t.at(1, 1) == -2);
    CHECK(t.at(0, 2) == 24);
    CHECK(t.square(3) == 1);
    const BpsTable t0 = kkv_bps_table(grid(), 0, 3);
    CHECK(t0.at(0, 1) == 1);
    CHECK(t0.at(0, 2) == 0);
    CHECK(t0.square(2) == -3);
}

TEST_CASE("pairs ledger")
{
    const PairsLedger ledger = build_pairs_ledger(grid(), 3, 2);
    CHECK(ledger.primitive(0) == q_over_one_plus_q_squared());
    CHECK(ledger.imprimitive(HodgeLabel{2, 3}) == multiple_cover(HodgeLabel{2, 3}, grid()));
    CHECK_THROWS_AS(ledger.primitive(4), TruncationError);
    PairsLedger bad;
    CHECK_THROWS_AS(bad.insert_primitive(0, RationalFunction::monomial(Rational(1), 1)), DomainError);
}

TEST_CASE("disconnected partition function: exp and log in the class variable")
{
    const auto connected = connected_pairs_ledger(grid(), 1, 3);
    const auto z = disconnected_partition(grid(), 1, 3);
    // Z_2 = F_2 + F_1^2 / 2
    CHECK(z[2] == connected[2] + connected[1] * connected[1] * make_rational(1, 2));
    CHECK(series_log(z) == connected);
}
