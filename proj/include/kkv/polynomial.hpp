#pragma once

#include "kkv/scalar.hpp"

#include <ostream>
#include <span>
#include <utility>
#include <vector>

namespace kkv {

// Dense univariate polynomial over the rationals. The coefficient vector never
// carries trailing zeros, so the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(int c) : Polynomial(Rational(c)) {}
    Polynomial(Rational c);
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial monomial(const Rational& c, int degree);
    // (1 + q)^n
    static Polynomial one_plus_q_pow(unsigned n);

    // -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const Rational> coefficients() const noexcept { return coeffs_; }
    Rational coefficient(int k) const;
    const Rational& leading() const;

    // Multiplicity of q as a factor; -1 for the zero polynomial.
    int low_degree() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    // Euclidean division; throws DomainError on a zero divisor.
    friend std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b);

    Polynomial monic() const;
    Rational evaluate(const Rational& x) const;

    // p(c q^k) for k >= 1.
    Polynomial substitute_monomial(const Rational& c, int k) const;
    // q^deg * p(1/q)
    Polynomial reversed() const;
    // p * q^k for k >= 0, p / q^(-k) for k < 0 (exact division required).
    Polynomial shifted(int k) const;

    // Largest m with (q - root)^m dividing p.
    int root_multiplicity(const Rational& root) const;

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

private:
    void trim();

    std::vector<Rational> coeffs_;
};

// Monic greatest common divisor (zero iff both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

} // namespace kkv
