#include "kkv/laurent_poly.hpp"

#include "kkv/errors.hpp"

#include <algorithm>

namespace kkv {

LaurentPolynomial::LaurentPolynomial(Rational c)
{
    if (sgn(c) != 0) {
        coeffs_.push_back(std::move(c));
    }
}

LaurentPolynomial::LaurentPolynomial(int low_degree, std::vector<Rational> coeffs)
    : low_(low_degree), coeffs_(std::move(coeffs))
{
    trim();
}

LaurentPolynomial LaurentPolynomial::monomial(const Rational& c, int degree)
{
    return LaurentPolynomial(degree, std::vector<Rational>{c});
}

void LaurentPolynomial::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) != 0; });
    low_ += static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
    if (coeffs_.empty()) {
        low_ = 0;
    }
}

Rational LaurentPolynomial::coefficient(int k) const
{
    if (is_zero() || k < low_ || k > high_degree()) {
        return Rational(0);
    }
    return coeffs_[static_cast<std::size_t>(k - low_)];
}

Rational LaurentPolynomial::evaluate(const Rational& z) const
{
    if (is_zero()) {
        return Rational(0);
    }
    if (sgn(z) == 0 && low_ < 0) {
        throw DomainError("Laurent polynomial evaluated at z = 0");
    }
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + *it;
    }
    Rational zk(1);
    const Rational base = low_ >= 0 ? z : Rational(1 / z);
    for (int i = 0; i < std::abs(low_); ++i) {
        zk *= base;
    }
    return acc * zk;
}

LaurentPolynomial LaurentPolynomial::inverted() const
{
    if (is_zero()) {
        return {};
    }
    return LaurentPolynomial(-high_degree(), std::vector<Rational>(coeffs_.rbegin(), coeffs_.rend()));
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o)
{
    if (o.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = o;
    }
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(high_degree(), o.high_degree());
    std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i + static_cast<std::size_t>(low_ - lo)] = coeffs_[i];
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        out[i + static_cast<std::size_t>(o.low_ - lo)] += o.coeffs_[i];
    }
    low_ = lo;
    coeffs_ = std::move(out);
    trim();
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) { return *this += -o; }

LaurentPolynomial operator-(const LaurentPolynomial& a)
{
    LaurentPolynomial r = a;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return LaurentPolynomial(a.low_ + b.low_, std::move(out));
}

LaurentPolynomial operator*(LaurentPolynomial a, const Rational& s)
{
    for (auto& c : a.coeffs_) {
        c *= s;
    }
    a.trim();
    return a;
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p)
{
    if (p.is_zero()) {
        return os << "0";
    }
    bool first = true;
    for (int k = p.low_degree(); k <= p.high_degree(); ++k) {
        const Rational c = p.coefficient(k);
        if (sgn(c) == 0) {
            continue;
        }
        os << (first ? "" : " + ") << c;
        if (k != 0) {
            os << "*z^" << k;
        }
        first = false;
    }
    return os;
}

bool is_symmetric(const LaurentPolynomial& p) { return p == p.inverted(); }

SymLaurentPoly::SymLaurentPoly(LaurentPolynomial p) : poly_(std::move(p))
{
    if (!is_symmetric(poly_)) {
        throw DomainError("Laurent polynomial is not invariant under z <-> 1/z");
    }
}

SymLaurentPoly SymLaurentPoly::lambda_power(int g)
{
    if (g < 0) {
        throw DomainError("negative power of lambda");
    }
    // (sqrt z - 1/sqrt z)^(2g): coefficient of z^k is (-1)^(g-k) C(2g, g+k).
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(2 * g + 1));
    for (int k = -g; k <= g; ++k) {
        Rational c(binomial(static_cast<unsigned long>(2 * g), static_cast<unsigned long>(g + k)));
        if ((g - k) % 2 != 0) {
            c = -c;
        }
        coeffs.push_back(std::move(c));
    }
    return SymLaurentPoly(LaurentPolynomial(-g, std::move(coeffs)), Trusted{});
}

} // namespace kkv
