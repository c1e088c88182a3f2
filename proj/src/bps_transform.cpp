#include "kkv/bps_transform.hpp"

#include "kkv/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace kkv {

namespace {

std::vector<int> divisors(int n)
{
    std::vector<int> out;
    for (int k = 1; k <= n; ++k) {
        if (n % k == 0) {
            out.push_back(k);
        }
    }
    return out;
}

// Memoizes sine brackets within one transform call.
class BracketCache {
public:
    explicit BracketCache(int order) : order_(order) {}

    const RationalSeries& get(int d, int genus)
    {
        auto key = std::make_pair(d, genus);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            it = cache_.emplace(key, sine_bracket(d, genus, order_)).first;
        }
        return it->second;
    }

private:
    int order_;
    std::map<std::pair<int, int>, RationalSeries> cache_;
};

RationalSeries grade_series(const BpsTable& table, int grade, int u_order, BracketCache& brackets)
{
    const int g_max = max_genus_for(u_order);
    auto acc = RationalSeries::zero(Variable::u, u_order);
    for (int k : divisors(grade)) {
        const int sub = grade / k;
        for (int g = 0; g <= g_max; ++g) {
            const Rational n = table.at(g, sub);
            if (sgn(n) == 0) {
                continue;
            }
            acc += brackets.get(k, g) * Rational(n / k);
        }
    }
    if (auto odd = acc.first_odd_term()) {
        throw DomainError("internal error: odd power u^" + std::to_string(*odd) + " in a GV series");
    }
    return acc;
}

} // namespace

void BpsTable::set(int genus, int grade, Rational value)
{
    if (genus < 0 || grade < 1) {
        throw DomainError("BPS entry needs genus >= 0 and grade >= 1");
    }
    if (sgn(value) == 0) {
        entries_.erase({genus, grade});
    } else {
        entries_[{genus, grade}] = std::move(value);
    }
}

Rational BpsTable::at(int genus, int grade) const
{
    auto it = entries_.find({genus, grade});
    return it == entries_.end() ? Rational(0) : it->second;
}

void BpsTable::set_square(int grade, int h) { squares_[grade] = h; }

std::optional<int> BpsTable::square(int grade) const
{
    auto it = squares_.find(grade);
    if (it == squares_.end()) {
        return std::nullopt;
    }
    return it->second;
}

int BpsTable::max_grade() const
{
    int out = 0;
    for (const auto& [key, value] : entries_) {
        out = std::max(out, key.second);
    }
    return out;
}

int BpsTable::max_genus(int grade) const
{
    int out = -1;
    for (const auto& [key, value] : entries_) {
        if (key.second == grade) {
            out = std::max(out, key.first);
        }
    }
    return out;
}

bool BpsTable::is_integral() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& kv) { return kkv::is_integral(kv.second); });
}

int max_genus_for(int u_order) { return u_order < -2 ? -1 : (u_order + 2) / 2; }

GwPotential::GwPotential(int d_max, int u_order) : d_max_(d_max), u_order_(u_order)
{
    if (d_max < 1) {
        throw DomainError("GW potential needs d_max >= 1");
    }
    if (u_order < -2) {
        throw TruncationError("u_order below -2 determines no genus");
    }
    values_.assign(static_cast<std::size_t>(d_max) * static_cast<std::size_t>(max_genus() + 1), Rational(0));
}

int GwPotential::max_genus() const noexcept { return max_genus_for(u_order_); }

std::size_t GwPotential::index(int genus, int grade) const
{
    if (grade < 1 || grade > d_max_ || genus < 0 || genus > max_genus()) {
        throw TruncationError("GW entry (g=" + std::to_string(genus) + ", d=" + std::to_string(grade) +
                              ") outside the potential's range");
    }
    return static_cast<std::size_t>(grade - 1) * static_cast<std::size_t>(max_genus() + 1) +
           static_cast<std::size_t>(genus);
}

const Rational& GwPotential::at(int genus, int grade) const { return values_[index(genus, grade)]; }

void GwPotential::set(int genus, int grade, Rational value) { values_[index(genus, grade)] = std::move(value); }

RationalSeries GwPotential::series(int grade) const
{
    std::vector<Rational> coeffs(static_cast<std::size_t>(u_order_ + 3), Rational(0));
    for (int g = 0; g <= max_genus(); ++g) {
        coeffs[static_cast<std::size_t>(2 * g)] = at(g, grade);
    }
    return RationalSeries(Variable::u, -2, std::move(coeffs));
}

RationalSeries sine_bracket(int d, int genus, int order)
{
    if (d < 1 || genus < 0) {
        throw DomainError("sine_bracket needs d >= 1 and genus >= 0");
    }
    if (order < 2 * genus - 2) {
        throw TruncationError("sine_bracket: order " + std::to_string(order) + " cannot hold the leading term u^" +
                              std::to_string(2 * genus - 2));
    }
    // 2 sin(d u / 2) = sum_j (-1)^j 2 (d/2)^(2j+1) u^(2j+1) / (2j+1)!
    // Its square has valuation 2; computing it through order + 4 is enough for
    // both positive powers and the inverse (which loses 4 orders).
    const int work = order + 4;
    std::vector<Rational> sine(static_cast<std::size_t>(work + 1), Rational(0));
    const Rational half_d(d, 2);
    Rational power = half_d; // (d/2)^(2j+1)
    for (int j = 0; 2 * j + 1 <= work; ++j) {
        Rational c = 2 * power / Rational(factorial(static_cast<unsigned long>(2 * j + 1)));
        sine[static_cast<std::size_t>(2 * j + 1)] = (j % 2 == 0) ? c : Rational(-c);
        power *= half_d * half_d;
    }
    const RationalSeries s(Variable::u, 0, std::move(sine));
    const RationalSeries square = s * s;
    const RationalSeries result = series_pow(square, genus - 1);
    if (result.order() < order) {
        throw TruncationError("internal error: sine_bracket precision loss");
    }
    return result.truncated(order);
}

RationalSeries gw_series(const BpsTable& table, int grade, int u_order)
{
    if (grade < 1) {
        throw DomainError("gw_series needs grade >= 1");
    }
    BracketCache brackets(u_order);
    return grade_series(table, grade, u_order, brackets);
}

GwPotential gw_from_bps(const BpsTable& table, int d_max, int u_order)
{
    GwPotential out(d_max, u_order);
    BracketCache brackets(u_order);
    for (int grade = 1; grade <= d_max; ++grade) {
        const RationalSeries s = grade_series(table, grade, u_order, brackets);
        for (int g = 0; g <= out.max_genus(); ++g) {
            out.set(g, grade, s.coefficient(2 * g - 2));
        }
    }
    return out;
}

BpsTable bps_from_gw(const GwPotential& potential, int d_max)
{
    if (d_max < 1 || d_max > potential.d_max()) {
        throw TruncationError("bps_from_gw: potential covers grades 1.." + std::to_string(potential.d_max()) +
                              ", requested " + std::to_string(d_max));
    }
    const int u_order = potential.u_order();
    const int g_max = potential.max_genus();
    BracketCache brackets(u_order);
    BpsTable out;
    for (int grade = 1; grade <= d_max; ++grade) {
        // Residual after removing multiple-cover contributions of proper divisors.
        RationalSeries residual = potential.series(grade);
        for (int k : divisors(grade)) {
            if (k == 1) {
                continue;
            }
            for (int g = 0; g <= g_max; ++g) {
                const Rational n = out.at(g, grade / k);
                if (sgn(n) != 0) {
                    residual -= brackets.get(k, g) * Rational(n / k);
                }
            }
        }
        // sine_bracket(1, g) = u^(2g-2) (1 + O(u^2)): peel off genus by genus.
        for (int g = 0; g <= g_max; ++g) {
            const Rational n = residual.coefficient(2 * g - 2);
            if (sgn(n) == 0) {
                continue;
            }
            out.set(g, grade, n);
            residual -= brackets.get(1, g) * n;
        }
    }
    return out;
}

} // namespace kkv
