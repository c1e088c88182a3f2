#pragma once

#include "kkv/laurent_series.hpp"
#include "kkv/polynomial.hpp"
#include "kkv/scalar.hpp"

#include <ostream>

namespace kkv {

/// A rational function of q in canonical form: numerator and denominator are
/// coprime and the denominator is monic. The zero function is 0/1.
///
/// Canonical form makes structural equality coincide with equality of
/// rational functions.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(int c) : RationalFunction(Rational(c)) {}
    RationalFunction(Rational c) : num_(std::move(c)), den_(1) {}
    RationalFunction(Polynomial num, Polynomial den);

    // c q^k, any integer k.
    static RationalFunction monomial(const Rational& c, int k);

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    // ord_{q=0} of the function; throws for the zero function.
    int order_at_zero() const;

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const Rational& s);

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

    // r(c q^k) for k >= 1.
    RationalFunction substitute_monomial(const Rational& c, int k) const;
    // r(1/q)
    RationalFunction inverted_variable() const;
    // Exact value at a rational point; throws DomainError at a pole.
    Rational evaluate(const Rational& x) const;

    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

private:
    struct Raw {};
    RationalFunction(Polynomial num, Polynomial den, Raw) : num_(std::move(num)), den_(std::move(den)) {}

    Polynomial num_;
    Polynomial den_;
};

/// Equality decided by cross-multiplication, independent of canonical form.
bool ratfn_eq(const RationalFunction& a, const RationalFunction& b);

/// Laurent expansion about q = 0, known through degree `order`.
RationalSeries ratfn_expand(const RationalFunction& r, int order);

/// r(q) == r(1/q) as rational functions.
bool check_q_inversion_symmetry(const RationalFunction& r);

inline RationalFunction unit_like(const RationalFunction&) { return RationalFunction(1); }
inline bool is_one(const RationalFunction& r) { return r == RationalFunction(1); }

} // namespace kkv
