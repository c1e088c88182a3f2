#pragma once

#include "kkv/scalar.hpp"

#include <ostream>
#include <span>
#include <vector>

namespace kkv {

// Laurent polynomial in z with rational coefficients, stored densely from
// low_degree(). Zero has no coefficients; leading and trailing zeros are trimmed.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    LaurentPolynomial(int c) : LaurentPolynomial(Rational(c)) {}
    LaurentPolynomial(Rational c);
    LaurentPolynomial(int low_degree, std::vector<Rational> coeffs);

    static LaurentPolynomial monomial(const Rational& c, int degree);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int low_degree() const noexcept { return low_; }
    int high_degree() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    std::span<const Rational> coefficients() const noexcept { return coeffs_; }
    Rational coefficient(int k) const;

    Rational evaluate(const Rational& z) const;
    // p(1/z)
    LaurentPolynomial inverted() const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator-(const LaurentPolynomial& a);
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& s);
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) = default;

    friend std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p);

private:
    void trim();

    int low_ = 0;
    std::vector<Rational> coeffs_;
};

/// Laurent polynomial in z invariant under z <-> 1/z.
///
/// The symmetry is checked on construction and preserved by every operation,
/// so sums and products of symmetric values never need re-validation.
class SymLaurentPoly {
public:
    SymLaurentPoly() = default;
    SymLaurentPoly(int c) : poly_(c) {}
    SymLaurentPoly(Rational c) : poly_(std::move(c)) {}
    // Throws DomainError unless p is symmetric.
    explicit SymLaurentPoly(LaurentPolynomial p);

    // (z - 2 + 1/z)^g = (sqrt z - 1/sqrt z)^(2g)
    static SymLaurentPoly lambda_power(int g);

    const LaurentPolynomial& polynomial() const noexcept { return poly_; }
    // Largest D with a nonzero coefficient of z^D; -1 for zero.
    int degree() const noexcept { return poly_.is_zero() ? -1 : poly_.high_degree(); }
    Rational coefficient(int k) const { return poly_.coefficient(k); }
    Rational evaluate_at_one() const { return poly_.evaluate(Rational(1)); }

    SymLaurentPoly& operator+=(const SymLaurentPoly& o)
    {
        poly_ += o.poly_;
        return *this;
    }
    SymLaurentPoly& operator-=(const SymLaurentPoly& o)
    {
        poly_ -= o.poly_;
        return *this;
    }
    friend SymLaurentPoly operator+(SymLaurentPoly a, const SymLaurentPoly& b) { return a += b; }
    friend SymLaurentPoly operator-(SymLaurentPoly a, const SymLaurentPoly& b) { return a -= b; }
    friend SymLaurentPoly operator-(const SymLaurentPoly& a) { return SymLaurentPoly(-a.poly_, Trusted{}); }
    friend SymLaurentPoly operator*(const SymLaurentPoly& a, const SymLaurentPoly& b)
    {
        return SymLaurentPoly(a.poly_ * b.poly_, Trusted{});
    }
    friend SymLaurentPoly operator*(const SymLaurentPoly& a, const Rational& s)
    {
        return SymLaurentPoly(a.poly_ * s, Trusted{});
    }
    friend bool operator==(const SymLaurentPoly& a, const SymLaurentPoly& b) = default;

    friend std::ostream& operator<<(std::ostream& os, const SymLaurentPoly& p) { return os << p.poly_; }

private:
    struct Trusted {};
    SymLaurentPoly(LaurentPolynomial p, Trusted) : poly_(std::move(p)) {}

    LaurentPolynomial poly_;
};

bool is_symmetric(const LaurentPolynomial& p);

} // namespace kkv
