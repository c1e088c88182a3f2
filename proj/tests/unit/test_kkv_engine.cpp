#include "kkv/kkv_engine.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace kkv;

namespace {

const std::vector<std::vector<long>> kTable = {
    {1, 24, 324, 3200, 25650},
    {0, -2, -54, -800, -8550},
    {0, 0, 3, 88, 1401},
    {0, 0, 0, -4, -126},
    {0, 0, 0, 0, 5},
};

// n_{g,h} from a z-polynomial by peeling off (z - 2 + 1/z)^g from the top,
// with the powers built by repeated multiplication.
std::vector<Integer> peel(LaurentPolynomial p, int h)
{
    std::vector<Integer> n(static_cast<std::size_t>(h) + 1, Integer(0));
    for (int g = h; g >= 0; --g) {
        const Rational c = p.coefficient(g);
        p -= oracle::lambda_by_multiplication(g) * c;
        REQUIRE(is_integral(c));
        n[static_cast<std::size_t>(g)] = (g % 2 == 0 ? 1 : -1) * to_integer(c);
    }
    REQUIRE(p.is_zero());
    return n;
}

} // namespace

TEST_CASE("lambda powers")
{
    for (int g = 0; g <= 8; ++g) {
        CHECK(SymLaurentPoly::lambda_power(g).polynomial() == oracle::lambda_by_multiplication(g));
        CHECK(SymLaurentPoly::lambda_power(g).degree() == g);
    }
    CHECK(SymLaurentPoly::lambda_power(3).evaluate_at_one() == 0);
}

TEST_CASE("symmetric Laurent polynomials reject asymmetric input")
{
    CHECK_THROWS_AS(SymLaurentPoly(LaurentPolynomial(0, {Rational(1), Rational(2)})), DomainError);
    CHECK_NOTHROW(SymLaurentPoly(LaurentPolynomial(-1, {Rational(2), Rational(5), Rational(2)})));
}

TEST_CASE("q^1 coefficient of the KKV product by hand")
{
    // (1-q)^-20 (1-zq)^-2 (1-q/z)^-2 = 1 + (20 + 2z + 2/z) q + O(q^2)
    const KkvSeries p = kkv_product(1);
    CHECK(p.coefficient(0).polynomial() == LaurentPolynomial(1));
    CHECK(p.coefficient(1).polynomial() == LaurentPolynomial(-1, {Rational(2), Rational(20), Rational(2)}));
}

TEST_CASE("KKV product against a factor-by-factor expansion")
{
    const int n = 6;
    const KkvSeries p = kkv_product(n);
    const auto expanded = oracle::kkv_by_expansion(n);
    for (int h = 0; h <= n; ++h) {
        CHECK(p.coefficient(h).polynomial() == expanded.coefficient(h));
    }
}

TEST_CASE("KKV table for h <= 4")
{
    const KkvBpsGrid grid = bps_grid_from_kkv(4);
    for (int g = 0; g <= 4; ++g) {
        for (int h = 0; h <= 4; ++h) {
            CHECK(grid.at(g, h) == kTable[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]);
        }
    }
    CHECK(grid.at(7, 3) == 0);
    CHECK(grid.at(0, -1) == 0);
    CHECK_THROWS_AS(grid.at(0, 5), TruncationError);
}

TEST_CASE("grid beyond the printed table agrees with the expansion oracle")
{
    const int n = 8;
    const KkvBpsGrid grid = bps_grid_from_kkv(n);
    const auto expanded = oracle::kkv_by_expansion(n);
    for (int h = 0; h <= n; ++h) {
        const auto want = peel(expanded.coefficient(h), h);
        for (int g = 0; g <= h; ++g) {
            CHECK(grid.at(g, h) == want[static_cast<std::size_t>(g)]);
        }
    }
}

TEST_CASE("diagonal and vanishing laws for h <= 20")
{
    const KkvBpsGrid grid = bps_grid_from_kkv(20);
    for (int h = 0; h <= 20; ++h) {
        CHECK(grid.at(h, h) == (h % 2 == 0 ? 1 : -1) * (h + 1));
        for (int g = h + 1; g <= 22; ++g) {
            CHECK(grid.at(g, h) == 0);
        }
    }
}

TEST_CASE("Yau-Zaslow series")
{
    const int n = 20;
    const RationalSeries yz = yau_zaslow_series(n);
    const auto eta = oracle::eta_power(24, n);
    const KkvSeries p = kkv_product(n);
    for (int h = 0; h <= n; ++h) {
        CHECK(yz.coefficient(h) == eta[static_cast<std::size_t>(h)]);
        CHECK(p.coefficient(h).evaluate_at_one() == yz.coefficient(h));
    }
    for (int h = 0; h <= 4; ++h) {
        CHECK(yz.coefficient(h) == kTable[0][static_cast<std::size_t>(h)]);
    }
}

TEST_CASE("lambda decomposition roundtrip on a known polynomial")
{
    const SymLaurentPoly p(LaurentPolynomial(-2, {Rational(1), Rational(3), Rational(7), Rational(3), Rational(1)}));
    const auto c = lambda_decompose(p);
    REQUIRE(c.size() == 3);
    CHECK(c[2] == 1);
    CHECK(lambda_recompose(c) == p);
    CHECK(lambda_decompose(SymLaurentPoly()).empty());
}

TEST_CASE("invalid truncation bounds")
{
    CHECK_THROWS_AS(kkv_product(-1), DomainError);
    CHECK_THROWS_AS(yau_zaslow_series(-1), DomainError);
    CHECK(bps_grid_from_kkv(0).at(0, 0) == 1);
}
