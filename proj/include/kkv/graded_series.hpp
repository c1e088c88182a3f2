#pragma once

#include "kkv/errors.hpp"
#include "kkv/scalar.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kkv {

/// A power series in a class-grading variable v, truncated at v^max_degree.
/// Grade d >= 1 holds an entry of type E (a Laurent series or a rational
/// function); grade 0 is either absent (a connected series) or a unit term
/// (a disconnected partition function).
template <typename E>
class GradedSeries {
public:
    GradedSeries(std::vector<E> positive_grades, std::optional<E> grade_zero = std::nullopt)
        : grades_(std::move(positive_grades)), grade_zero_(std::move(grade_zero))
    {
        if (grades_.empty()) {
            throw DomainError("graded series needs max_degree >= 1");
        }
    }

    int max_degree() const noexcept { return static_cast<int>(grades_.size()); }
    const std::optional<E>& grade_zero() const noexcept { return grade_zero_; }

    // d in 1 .. max_degree
    const E& operator[](int d) const
    {
        if (d < 1 || d > max_degree()) {
            throw TruncationError("grade " + std::to_string(d) + " outside 1.." + std::to_string(max_degree()));
        }
        return grades_[static_cast<std::size_t>(d - 1)];
    }

    const std::vector<E>& positive_grades() const noexcept { return grades_; }

    friend bool operator==(const GradedSeries&, const GradedSeries&) = default;

private:
    std::vector<E> grades_;
    std::optional<E> grade_zero_;
};

/// exp in the grading variable: F_d = G_d + (1/d) sum_{k<d} k G_k F_{d-k}.
template <typename E>
GradedSeries<E> series_exp(const GradedSeries<E>& g)
{
    if (g.grade_zero() && !g.grade_zero()->is_zero()) {
        throw DomainError("series_exp: nonzero constant term in the grading variable");
    }
    std::vector<E> f;
    f.reserve(static_cast<std::size_t>(g.max_degree()));
    for (int d = 1; d <= g.max_degree(); ++d) {
        std::optional<E> acc;
        for (int k = 1; k < d; ++k) {
            E term = (g[k] * f[static_cast<std::size_t>(d - k - 1)]) * Rational(k);
            acc = acc ? E(*acc + term) : term;
        }
        f.push_back(acc ? E(g[d] + *acc * Rational(1, d)) : g[d]);
    }
    E unit = unit_like(g[1]);
    return GradedSeries<E>(std::move(f), std::move(unit));
}

/// log in the grading variable; the grade-0 term must be exactly 1.
template <typename E>
GradedSeries<E> series_log(const GradedSeries<E>& f)
{
    if (!f.grade_zero() || !is_one(*f.grade_zero())) {
        throw DomainError("series_log: grade-0 term must be 1");
    }
    std::vector<E> g;
    g.reserve(static_cast<std::size_t>(f.max_degree()));
    for (int d = 1; d <= f.max_degree(); ++d) {
        std::optional<E> acc;
        for (int k = 1; k < d; ++k) {
            E term = (g[static_cast<std::size_t>(k - 1)] * f[d - k]) * Rational(k);
            acc = acc ? E(*acc + term) : term;
        }
        g.push_back(acc ? E(f[d] - *acc * Rational(1, d)) : f[d]);
    }
    return GradedSeries<E>(std::move(g));
}

} // namespace kkv
