#pragma once

// Reference computations for the tests. Each one takes a different route from
// the library code it is compared against.

#include "kkv/laurent_poly.hpp"
#include "kkv/laurent_series.hpp"
#include "kkv/rational_function.hpp"

#include <random>
#include <vector>

namespace oracle {

using kkv::Integer;
using kkv::LaurentPolynomial;
using kkv::Rational;
using kkv::RationalSeries;
using kkv::Variable;

// cos(d u) through u^order from its Taylor series.
inline RationalSeries cos_series(int d, int order)
{
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
    Integer dk(1);
    for (int k = 0; k <= order; ++k) {
        if (k % 2 == 0) {
            const int sign = (k / 2) % 2 == 0 ? 1 : -1;
            c[static_cast<std::size_t>(k)] = Rational(dk * sign, kkv::factorial(static_cast<unsigned long>(k)));
        }
        dk *= d;
    }
    for (auto& x : c) {
        x.canonicalize();
    }
    return RationalSeries(Variable::u, 0, std::move(c));
}

// (2 sin(d u / 2))^2 = 2 - 2 cos(d u)
inline RationalSeries two_minus_two_cos(int d, int order)
{
    return RationalSeries::constant(Variable::u, Rational(2), order) - cos_series(d, order) * Rational(2);
}

// (2 sin(d u / 2))^(2g - 2) through u^order, as a power of 2 - 2 cos(d u).
inline RationalSeries sine_power(int d, int genus, int order)
{
    // 2 - 2cos has valuation 2; a power e >= -1 of it needs order + 2 + 2 terms at most.
    const int work = order + 4;
    const RationalSeries base = two_minus_two_cos(d, work);
    RationalSeries out = RationalSeries::constant(Variable::u, Rational(1), work);
    if (genus == 0) {
        out = kkv::series_inverse(base);
    }
    for (int e = 1; e < genus; ++e) {
        out = out * base;
    }
    return out.truncated(order);
}

// Coefficients of prod_{n >= 1} (1 - q^n)^(-e) through q^h_max, by multiplying in
// one geometric series at a time.
inline std::vector<Integer> eta_power(int exponent, int h_max)
{
    std::vector<Integer> a(static_cast<std::size_t>(h_max) + 1, Integer(0));
    a[0] = 1;
    for (int n = 1; n <= h_max; ++n) {
        for (int rep = 0; rep < exponent; ++rep) {
            std::vector<Integer> next(a.size(), Integer(0));
            for (int j = 0; j <= h_max; ++j) {
                for (int m = 0; j + m * n <= h_max; ++m) {
                    next[static_cast<std::size_t>(j + m * n)] += a[static_cast<std::size_t>(j)];
                }
            }
            a = std::move(next);
        }
    }
    return a;
}

// The KKV product as a q-series of Laurent polynomials in z, expanded factor
// by factor with truncated geometric series.
inline kkv::LaurentSeries<LaurentPolynomial> kkv_by_expansion(int q_order)
{
    using S = kkv::LaurentSeries<LaurentPolynomial>;
    S acc = S::constant(Variable::q, LaurentPolynomial(1), q_order);
    for (int n = 1; n <= q_order; ++n) {
        for (int s : {0, 1, -1}) {
            std::vector<LaurentPolynomial> geo(static_cast<std::size_t>(q_order) + 1, LaurentPolynomial(0));
            for (int m = 0; m * n <= q_order; ++m) {
                geo[static_cast<std::size_t>(m * n)] = LaurentPolynomial::monomial(Rational(1), s * m);
            }
            const S factor(Variable::q, 0, geo);
            const int reps = s == 0 ? 20 : 2;
            for (int r = 0; r < reps; ++r) {
                acc = acc * factor;
            }
        }
    }
    return acc;
}

// (z - 2 + 1/z)^g by repeated multiplication.
inline LaurentPolynomial lambda_by_multiplication(int g)
{
    const LaurentPolynomial lambda(-1, {Rational(1), Rational(-2), Rational(1)});
    LaurentPolynomial out(1);
    for (int i = 0; i < g; ++i) {
        out = out * lambda;
    }
    return out;
}

inline Rational random_rational(std::mt19937_64& rng, long bound = 9, long den_bound = 5)
{
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    return kkv::make_rational(num(rng), den(rng));
}

inline kkv::Polynomial random_polynomial(std::mt19937_64& rng, int max_degree)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rational> c;
    for (int i = 0, n = deg(rng); i <= n; ++i) {
        c.push_back(random_rational(rng));
    }
    return kkv::Polynomial(std::move(c));
}

inline kkv::RationalFunction random_ratfn(std::mt19937_64& rng, int max_degree = 3)
{
    kkv::Polynomial den = random_polynomial(rng, max_degree);
    if (den.is_zero()) {
        den = kkv::Polynomial(1);
    }
    return kkv::RationalFunction(random_polynomial(rng, max_degree), den);
}

inline RationalSeries random_series(std::mt19937_64& rng, int min_degree, int order)
{
    std::vector<Rational> c;
    for (int k = min_degree; k <= order; ++k) {
        c.push_back(random_rational(rng));
    }
    return RationalSeries(Variable::u, min_degree, std::move(c));
}

} // namespace oracle
