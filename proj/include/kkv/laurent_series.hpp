#pragma once

#include "kkv/errors.hpp"
#include "kkv/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kkv {

// Formal variables. Series in different variables never mix implicitly.
enum class Variable { u, q, t };

std::string to_string(Variable v);
Variable parse_variable(std::string_view name);

/// A Laurent series in one formal variable, known exactly up to and including
/// degree `order()`. Coefficients are stored densely from `min_degree()`.
///
/// Every arithmetic operation propagates truncation pessimistically: the result
/// never claims a coefficient that is not determined by the known coefficients
/// of its operands. `min_degree()` is nominal; leading stored coefficients may
/// be zero, and `valuation()` reports the true lowest nonzero degree.
template <RingElement C>
class LaurentSeries {
public:
    /// Coefficients for degrees min_degree .. min_degree + coeffs.size() - 1.
    LaurentSeries(Variable var, int min_degree, std::vector<C> coeffs)
        : var_(var), min_degree_(min_degree), coeffs_(std::move(coeffs))
    {
    }

    /// Pads with zeros (or drops terms) so that the series is known to `order`.
    LaurentSeries(Variable var, int min_degree, std::vector<C> coeffs, int order)
        : var_(var), min_degree_(min_degree), coeffs_(std::move(coeffs))
    {
        if (order < min_degree - 1) {
            throw TruncationError("truncation order " + std::to_string(order) + " below min_degree " +
                                  std::to_string(min_degree));
        }
        coeffs_.resize(static_cast<std::size_t>(order - min_degree + 1), C(0));
    }

    static LaurentSeries zero(Variable var, int order) { return LaurentSeries(var, order + 1, {}); }

    static LaurentSeries monomial(Variable var, const C& c, int degree, int order)
    {
        if (order < degree) {
            return zero(var, order);
        }
        std::vector<C> v(static_cast<std::size_t>(order - degree + 1), C(0));
        v[0] = c;
        return LaurentSeries(var, degree, std::move(v));
    }

    static LaurentSeries constant(Variable var, const C& c, int order) { return monomial(var, c, 0, order); }

    Variable variable() const noexcept { return var_; }
    int min_degree() const noexcept { return min_degree_; }
    int order() const noexcept { return min_degree_ + static_cast<int>(coeffs_.size()) - 1; }
    std::span<const C> coefficients() const noexcept { return coeffs_; }

    C coefficient(int degree) const
    {
        if (degree > order()) {
            throw TruncationError("coefficient of degree " + std::to_string(degree) +
                                  " beyond truncation order " + std::to_string(order()));
        }
        if (degree < min_degree_) {
            return C(0);
        }
        return coeffs_[static_cast<std::size_t>(degree - min_degree_)];
    }

    /// Lowest degree with a nonzero coefficient, if any known coefficient is nonzero.
    std::optional<int> valuation() const
    {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (!(coeffs_[i] == C(0))) {
                return min_degree_ + static_cast<int>(i);
            }
        }
        return std::nullopt;
    }

    bool is_zero() const { return !valuation().has_value(); }

    /// Drops all coefficients above `order`.
    LaurentSeries truncated(int order) const
    {
        if (order > this->order()) {
            throw TruncationError("cannot extend a series from order " + std::to_string(this->order()) +
                                  " to " + std::to_string(order));
        }
        if (order < min_degree_ - 1) {
            return LaurentSeries(var_, order + 1, {});
        }
        return LaurentSeries(var_, min_degree_, {coeffs_.begin(), coeffs_.begin() + (order - min_degree_ + 1)});
    }

    /// Leading zero coefficients removed; min_degree becomes the valuation.
    LaurentSeries normalized() const
    {
        auto v = valuation();
        if (!v) {
            return LaurentSeries(var_, order() + 1, {});
        }
        return LaurentSeries(var_, *v, {coeffs_.begin() + (*v - min_degree_), coeffs_.end()});
    }

    /// True iff every known odd-degree coefficient vanishes.
    bool is_even() const { return !first_odd_term().has_value(); }

    std::optional<int> first_odd_term() const
    {
        for (int k = min_degree_; k <= order(); ++k) {
            if ((k % 2 != 0) && !(coefficient(k) == C(0))) {
                return k;
            }
        }
        return std::nullopt;
    }

    LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
    LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
    LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b)
    {
        return combine(a, b, [](const C& x, const C& y) { return C(x + y); });
    }

    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b)
    {
        return combine(a, b, [](const C& x, const C& y) { return C(x - y); });
    }

    friend LaurentSeries operator-(const LaurentSeries& a)
    {
        std::vector<C> v;
        v.reserve(a.coeffs_.size());
        for (const auto& c : a.coeffs_) {
            v.push_back(C(-c));
        }
        return LaurentSeries(a.var_, a.min_degree_, std::move(v));
    }

    /// Cauchy product. Known to min(order_a + val_b, order_b + val_a).
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b)
    {
        require_same_variable(a, b);
        const int va = a.valuation().value_or(a.order() + 1);
        const int vb = b.valuation().value_or(b.order() + 1);
        const int order = std::min(a.order() + vb, b.order() + va);
        const int lo = a.min_degree_ + b.min_degree_;
        std::vector<C> out(static_cast<std::size_t>(order - lo + 1), C(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == C(0)) {
                continue;
            }
            const int di = a.min_degree_ + static_cast<int>(i);
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                const int deg = di + b.min_degree_ + static_cast<int>(j);
                if (deg > order) {
                    break;
                }
                out[static_cast<std::size_t>(deg - lo)] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return LaurentSeries(a.var_, lo, std::move(out));
    }

    friend LaurentSeries operator*(const LaurentSeries& a, const Rational& s)
    {
        std::vector<C> v;
        v.reserve(a.coeffs_.size());
        for (const auto& c : a.coeffs_) {
            v.push_back(C(c * s));
        }
        return LaurentSeries(a.var_, a.min_degree_, std::move(v));
    }

    friend LaurentSeries operator*(const Rational& s, const LaurentSeries& a) { return a * s; }

    /// Same variable, same truncation order, same coefficients.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b)
    {
        return a.var_ == b.var_ && a.order() == b.order() && !first_mismatch(a, b).has_value();
    }

    /// Lowest degree, up to the smaller of the two orders, where a and b differ.
    friend std::optional<int> first_mismatch(const LaurentSeries& a, const LaurentSeries& b)
    {
        require_same_variable(a, b);
        const int hi = std::min(a.order(), b.order());
        for (int k = std::min(a.min_degree_, b.min_degree_); k <= hi; ++k) {
            if (!(a.coefficient(k) == b.coefficient(k))) {
                return k;
            }
        }
        return std::nullopt;
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentSeries& s)
    {
        bool first = true;
        for (int k = s.min_degree_; k <= s.order(); ++k) {
            const C c = s.coefficient(k);
            if (c == C(0)) {
                continue;
            }
            os << (first ? "" : " + ") << "(" << c << ")";
            if (k != 0) {
                os << "*" << to_string(s.var_) << "^" << k;
            }
            first = false;
        }
        if (first) {
            os << "0";
        }
        return os << " + O(" << to_string(s.var_) << "^" << s.order() + 1 << ")";
    }

private:
    static void require_same_variable(const LaurentSeries& a, const LaurentSeries& b)
    {
        if (a.var_ != b.var_) {
            throw VariableMismatch("cannot combine a series in " + to_string(a.var_) + " with one in " +
                                   to_string(b.var_));
        }
    }

    template <typename Op>
    static LaurentSeries combine(const LaurentSeries& a, const LaurentSeries& b, Op op)
    {
        require_same_variable(a, b);
        const int order = std::min(a.order(), b.order());
        const int lo = std::min(a.min_degree_, b.min_degree_);
        std::vector<C> out;
        out.reserve(static_cast<std::size_t>(std::max(order - lo + 1, 0)));
        for (int k = lo; k <= order; ++k) {
            out.push_back(op(a.coefficient(k), b.coefficient(k)));
        }
        return LaurentSeries(a.var_, lo, std::move(out));
    }

    Variable var_;
    int min_degree_;
    std::vector<C> coeffs_;
};

template <RingElement C>
LaurentSeries<C> series_mul(const LaurentSeries<C>& a, const LaurentSeries<C>& b)
{
    return a * b;
}

/// Multiplicative inverse. A series with valuation m known to order N
/// inverts to one with min_degree -m known to order N - 2m.
template <FieldElement C>
LaurentSeries<C> series_inverse(const LaurentSeries<C>& a)
{
    const auto val = a.valuation();
    if (!val) {
        throw DomainError("cannot invert a series with no known nonzero coefficient");
    }
    const int rel = a.order() - *val;
    const C lead_inv = C(C(1) / a.coefficient(*val));
    std::vector<C> x;
    x.reserve(static_cast<std::size_t>(rel + 1));
    x.push_back(lead_inv);
    for (int k = 1; k <= rel; ++k) {
        C acc(0);
        for (int j = 1; j <= k; ++j) {
            acc += a.coefficient(*val + j) * x[static_cast<std::size_t>(k - j)];
        }
        x.push_back(C(-(acc * lead_inv)));
    }
    return LaurentSeries<C>(a.variable(), -*val, std::move(x));
}

template <FieldElement C>
LaurentSeries<C> series_inv(const LaurentSeries<C>& a)
{
    return series_inverse(a);
}

/// exp(a) for a series whose coefficients in degrees <= 0 all vanish.
template <FieldElement C>
LaurentSeries<C> series_exp(const LaurentSeries<C>& a)
{
    for (int k = a.min_degree(); k <= std::min(0, a.order()); ++k) {
        if (!(a.coefficient(k) == C(0))) {
            throw DomainError("series_exp: nonzero coefficient in degree " + std::to_string(k));
        }
    }
    if (a.order() < 0) {
        throw TruncationError("series_exp: constant term of the argument is not known");
    }
    const int n_max = a.order();
    std::vector<C> f{C(1)};
    for (int n = 1; n <= n_max; ++n) {
        C acc(0);
        for (int k = 1; k <= n; ++k) {
            acc += (a.coefficient(k) * f[static_cast<std::size_t>(n - k)]) * Rational(k);
        }
        f.push_back(C(acc * Rational(1, n)));
    }
    return LaurentSeries<C>(a.variable(), 0, std::move(f));
}

/// log(a) for a series of the form 1 + (positive-degree terms).
template <FieldElement C>
LaurentSeries<C> series_log(const LaurentSeries<C>& a)
{
    for (int k = a.min_degree(); k < std::min(0, a.order() + 1); ++k) {
        if (!(a.coefficient(k) == C(0))) {
            throw DomainError("series_log: nonzero coefficient in negative degree " + std::to_string(k));
        }
    }
    if (a.order() < 0 || !(a.coefficient(0) == C(1))) {
        throw DomainError("series_log: constant term must be 1");
    }
    const int n_max = a.order();
    std::vector<C> g{C(0)};
    for (int n = 1; n <= n_max; ++n) {
        C acc(0);
        for (int k = 1; k < n; ++k) {
            acc += (g[static_cast<std::size_t>(k)] * a.coefficient(n - k)) * Rational(k);
        }
        g.push_back(C(a.coefficient(n) - acc * Rational(1, n)));
    }
    return LaurentSeries<C>(a.variable(), 0, std::move(g));
}

/// Integer power by repeated squaring; negative exponents go through the inverse.
template <RingElement C>
LaurentSeries<C> series_pow(LaurentSeries<C> base, int exponent)
{
    if (exponent < 0) {
        if constexpr (FieldElement<C>) {
            return series_pow(series_inverse(base), -exponent);
        } else {
            throw DomainError("negative power of a series over a ring without division");
        }
    }
    auto result = LaurentSeries<C>::constant(base.variable(), C(1), base.order() - base.valuation().value_or(0));
    while (exponent > 0) {
        if (exponent & 1) {
            result = result * base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

// Unit element matching the variable and order of a sample series.
template <RingElement C>
LaurentSeries<C> unit_like(const LaurentSeries<C>& sample)
{
    return LaurentSeries<C>::constant(sample.variable(), C(1), std::max(sample.order(), 0));
}

template <RingElement C>
bool is_one(const LaurentSeries<C>& s)
{
    if (s.order() < 0) {
        return false;
    }
    for (int k = s.min_degree(); k <= s.order(); ++k) {
        if (!(s.coefficient(k) == (k == 0 ? C(1) : C(0)))) {
            return false;
        }
    }
    return true;
}

using RationalSeries = LaurentSeries<Rational>;
using GaussianSeries = LaurentSeries<GaussianRational>;

} // namespace kkv
