#pragma once

#include "kkv/laurent_series.hpp"
#include "kkv/scalar.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace kkv {

/// BPS numbers n_{g, d beta} over multiples of one primitive class beta.
///
/// Values are stored as rationals: the forward tables used in practice are
/// integral, but inverting an arbitrary Gromov-Witten potential need not be,
/// and integrality is reported by is_integral() rather than enforced.
class BpsTable {
public:
    using Key = std::pair<int, int>; // (genus, grade)

    void set(int genus, int grade, Rational value);
    // Zero for entries never set.
    Rational at(int genus, int grade) const;

    // Optional metadata: h with (grade * beta)^2 = 2h - 2.
    void set_square(int grade, int h);
    std::optional<int> square(int grade) const;

    // Largest grade / genus with a nonzero entry (0 / -1 when empty).
    int max_grade() const;
    int max_genus(int grade) const;
    bool is_integral() const;
    bool empty() const { return entries_.empty(); }

    const std::map<Key, Rational>& entries() const noexcept { return entries_; }

    friend bool operator==(const BpsTable& a, const BpsTable& b) { return a.entries_ == b.entries_; }

private:
    std::map<Key, Rational> entries_; // zero values are never stored
    std::map<int, int> squares_;
};

/// Gromov-Witten invariants N_{g, d beta} for grades 1..d_max, exact up to the
/// genera whose u^(2g-2) coefficient lies within u_order.
class GwPotential {
public:
    GwPotential(int d_max, int u_order);

    int d_max() const noexcept { return d_max_; }
    int u_order() const noexcept { return u_order_; }
    int max_genus() const noexcept;

    const Rational& at(int genus, int grade) const;
    void set(int genus, int grade, Rational value);

    // Sum_g N_{g,grade} u^(2g-2), known through u_order.
    RationalSeries series(int grade) const;

    friend bool operator==(const GwPotential&, const GwPotential&) = default;

private:
    std::size_t index(int genus, int grade) const;

    int d_max_;
    int u_order_;
    std::vector<Rational> values_; // grade-major, genus 0..max_genus
};

// Largest genus g with 2g - 2 <= u_order.
int max_genus_for(int u_order);
// Truncation that makes extraction through genus g_max exact.
inline int default_u_order(int g_max) { return 2 * g_max + 2; }

/// Laurent series in u of (2 sin(d u / 2))^(2g - 2) through degree `order`.
RationalSeries sine_bracket(int d, int genus, int order);

/// The grade-`grade` u-series sum_{k | grade} (1/k) sum_g n_{g, grade/k} (2 sin(k u/2))^(2g-2).
RationalSeries gw_series(const BpsTable& table, int grade, int u_order);

GwPotential gw_from_bps(const BpsTable& table, int d_max, int u_order);

/// Inverse transform, solved grade by grade (divisor recursion) and genus by
/// genus (triangular in the sine-bracket basis).
BpsTable bps_from_gw(const GwPotential& potential, int d_max);

} // namespace kkv
