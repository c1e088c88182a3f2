#include "kkv/rational_function.hpp"

#include "kkv/errors.hpp"

#include <algorithm>

namespace kkv {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
{
    if (den.is_zero()) {
        throw DomainError("rational function with zero denominator");
    }
    if (num.is_zero()) {
        num_ = Polynomial{};
        den_ = Polynomial(1);
        return;
    }
    // Powers of q are the common factor in nearly every function handled here;
    // stripping them first keeps the Euclidean gcd on small-degree inputs.
    const int shift = std::min(num.low_degree(), den.low_degree());
    if (shift > 0) {
        num = num.shifted(-shift);
        den = den.shifted(-shift);
    }
    const Polynomial g = gcd(num, den);
    if (g.degree() > 0) {
        num = divrem(num, g).first;
        den = divrem(den, g).first;
    }
    const Rational lead_inv = 1 / den.leading();
    num_ = num * lead_inv;
    den_ = den * lead_inv;
}

RationalFunction RationalFunction::monomial(const Rational& c, int k)
{
    if (k >= 0) {
        return RationalFunction(Polynomial::monomial(c, k), Polynomial(1));
    }
    return RationalFunction(Polynomial(c), Polynomial::monomial(Rational(1), -k));
}

int RationalFunction::order_at_zero() const
{
    if (is_zero()) {
        throw DomainError("order at zero of the zero function");
    }
    return num_.low_degree() - den_.low_degree();
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
{
    if (a.den_ == b.den_) {
        return RationalFunction(a.num_ + b.num_, a.den_);
    }
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator-(const RationalFunction& a) { return RationalFunction(-a.num_, a.den_, RationalFunction::Raw{}); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
{
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
{
    if (b.is_zero()) {
        throw DomainError("division by the zero rational function");
    }
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction operator*(const RationalFunction& a, const Rational& s)
{
    if (sgn(s) == 0) {
        return RationalFunction{};
    }
    return RationalFunction(a.num_ * s, a.den_, RationalFunction::Raw{});
}

RationalFunction RationalFunction::substitute_monomial(const Rational& c, int k) const
{
    if (sgn(c) == 0) {
        throw DomainError("substitution q -> 0 * q^k");
    }
    return RationalFunction(num_.substitute_monomial(c, k), den_.substitute_monomial(c, k));
}

RationalFunction RationalFunction::inverted_variable() const
{
    if (is_zero()) {
        return *this;
    }
    // N(1/q) / D(1/q) = q^(deg D - deg N) * rev(N) / rev(D)
    const int shift = den_.degree() - num_.degree();
    Polynomial num = num_.reversed();
    Polynomial den = den_.reversed();
    if (shift >= 0) {
        num = num.shifted(shift);
    } else {
        den = den.shifted(-shift);
    }
    return RationalFunction(std::move(num), std::move(den));
}

Rational RationalFunction::evaluate(const Rational& x) const
{
    const Rational d = den_.evaluate(x);
    if (sgn(d) == 0) {
        throw DomainError("evaluation at a pole");
    }
    return num_.evaluate(x) / d;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& r)
{
    return os << "[" << r.num_ << "] / [" << r.den_ << "]";
}

bool ratfn_eq(const RationalFunction& a, const RationalFunction& b)
{
    return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

RationalSeries ratfn_expand(const RationalFunction& r, int order)
{
    if (r.is_zero()) {
        return RationalSeries::zero(Variable::q, order);
    }
    const int num_low = r.numerator().low_degree();
    const int den_low = r.denominator().low_degree();
    const int lead = num_low - den_low;
    if (order < lead) {
        return RationalSeries::zero(Variable::q, order);
    }
    const Polynomial num = r.numerator().shifted(-num_low);
    const Polynomial den = r.denominator().shifted(-den_low);
    // Power series num/den with den(0) != 0, coefficients 0 .. order - lead.
    const int n = order - lead;
    const Rational den0_inv = 1 / den.coefficient(0);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Rational acc = num.coefficient(k);
        for (int j = 1; j <= std::min(k, den.degree()); ++j) {
            acc -= den.coefficient(j) * out[static_cast<std::size_t>(k - j)];
        }
        out.push_back(acc * den0_inv);
    }
    return RationalSeries(Variable::q, lead, std::move(out));
}

bool check_q_inversion_symmetry(const RationalFunction& r) { return ratfn_eq(r, r.inverted_variable()); }

} // namespace kkv
