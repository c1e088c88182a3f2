#include "kkv/polynomial.hpp"

#include "kkv/errors.hpp"

#include <algorithm>
#include <string>

namespace kkv {

Polynomial::Polynomial(Rational c)
{
    if (sgn(c) != 0) {
        coeffs_.push_back(std::move(c));
    }
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, int degree)
{
    if (degree < 0) {
        throw DomainError("negative degree monomial in a polynomial");
    }
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
    v.back() = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::one_plus_q_pow(unsigned n)
{
    std::vector<Rational> v;
    v.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        v.emplace_back(binomial(n, k));
    }
    return Polynomial(std::move(v));
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

Rational Polynomial::coefficient(int k) const
{
    if (k < 0 || k > degree()) {
        return Rational(0);
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading() const
{
    if (is_zero()) {
        throw DomainError("leading coefficient of the zero polynomial");
    }
    return coeffs_.back();
}

int Polynomial::low_degree() const
{
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) != 0) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial operator-(const Polynomial& a)
{
    Polynomial r = a;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(Polynomial a, const Rational& s)
{
    if (sgn(s) == 0) {
        return {};
    }
    for (auto& c : a.coeffs_) {
        c *= s;
    }
    return a;
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero()) {
        throw DomainError("polynomial division by zero");
    }
    if (a.degree() < b.degree()) {
        return {Polynomial{}, a};
    }
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
    const Rational lead_inv = 1 / b.leading();
    const int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        const Rational& top = rem[static_cast<std::size_t>(k)];
        if (sgn(top) == 0) {
            continue;
        }
        const Rational factor = top * lead_inv;
        quot[static_cast<std::size_t>(k - db)] = factor;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(k - db + j)] -= factor * b.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::monic() const
{
    if (is_zero()) {
        return {};
    }
    return *this * Rational(1 / leading());
}

Rational Polynomial::evaluate(const Rational& x) const
{
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::substitute_monomial(const Rational& c, int k) const
{
    if (k < 1) {
        throw DomainError("monomial substitution needs a positive exponent");
    }
    if (is_zero()) {
        return {};
    }
    std::vector<Rational> out(static_cast<std::size_t>(degree()) * static_cast<std::size_t>(k) + 1, Rational(0));
    Rational power(1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i * static_cast<std::size_t>(k)] = coeffs_[i] * power;
        power *= c;
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::reversed() const
{
    std::vector<Rational> out(coeffs_.rbegin(), coeffs_.rend());
    return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted(int k) const
{
    if (is_zero()) {
        return {};
    }
    if (k >= 0) {
        std::vector<Rational> out(static_cast<std::size_t>(k), Rational(0));
        out.insert(out.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(std::move(out));
    }
    if (low_degree() < -k) {
        throw DomainError("polynomial not divisible by q^" + std::to_string(-k));
    }
    return Polynomial(std::vector<Rational>(coeffs_.begin() + (-k), coeffs_.end()));
}

int Polynomial::root_multiplicity(const Rational& root) const
{
    if (is_zero()) {
        throw DomainError("root multiplicity of the zero polynomial");
    }
    const Polynomial linear(std::vector<Rational>{Rational(-root), Rational(1)});
    Polynomial p = *this;
    int m = 0;
    while (true) {
        auto [quot, rem] = divrem(p, linear);
        if (!rem.is_zero()) {
            return m;
        }
        p = std::move(quot);
        ++m;
    }
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p)
{
    if (p.is_zero()) {
        return os << "0";
    }
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (sgn(p.coeffs_[i]) == 0) {
            continue;
        }
        os << (first ? "" : " + ") << "(" << p.coeffs_[i] << ")";
        if (i > 0) {
            os << "*q^" << i;
        }
        first = false;
    }
    return os;
}

Polynomial gcd(Polynomial a, Polynomial b)
{
    while (!b.is_zero()) {
        auto r = divrem(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

} // namespace kkv
