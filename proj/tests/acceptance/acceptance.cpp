// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include "kkv/checks.hpp"
#include "kkv/kkv_engine.hpp"
#include "kkv/pairs_mnop.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace kkv;

namespace {

struct Criterion {
    int id;
    std::string title;
    double time_limit; // seconds, 0 for none
    std::function<std::string()> run;
};

const std::vector<std::vector<long>> kTable = {
    {1, 24, 324, 3200, 25650},
    {0, -2, -54, -800, -8550},
    {0, 0, 3, 88, 1401},
    {0, 0, 0, -4, -126},
    {0, 0, 0, 0, 5},
};

std::string criterion_table()
{
    const KkvBpsGrid grid = bps_grid_from_kkv(4);
    for (int g = 0; g <= 6; ++g) {
        for (int h = 0; h <= 4; ++h) {
            const long want = g <= 4 ? kTable[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] : 0;
            if (grid.at(g, h) != want) {
                std::ostringstream os;
                os << "n_{" << g << "," << h << "} = " << grid.at(g, h) << ", want " << want;
                return os.str();
            }
        }
    }
    return {};
}

std::string criterion_yau_zaslow()
{
    const RationalSeries yz = yau_zaslow_series(20);
    for (int h = 0; h <= 4; ++h) {
        if (yz.coefficient(h) != kTable[0][static_cast<std::size_t>(h)]) {
            return "coefficient of q^" + std::to_string(h);
        }
    }
    // Two further frozen values of prod (1 - q^n)^-24.
    if (yz.coefficient(5) != 176256 || yz.coefficient(10) != 639249300) {
        return "frozen coefficients at q^5 / q^10";
    }
    const KkvSeries product = kkv_product(20);
    for (int h = 0; h <= 20; ++h) {
        if (product.coefficient(h).evaluate_at_one() != yz.coefficient(h)) {
            return "z = 1 specialization at q^" + std::to_string(h);
        }
    }
    return {};
}

std::string criterion_diagonal()
{
    const KkvBpsGrid grid = bps_grid_from_kkv(20);
    for (int h = 0; h <= 20; ++h) {
        if (grid.at(h, h) != (h % 2 == 0 ? 1 : -1) * (h + 1)) {
            return "n_{h,h} at h=" + std::to_string(h);
        }
        for (int g = h + 1; g <= 21; ++g) {
            if (grid.at(g, h) != 0) {
                return "n_{" + std::to_string(g) + "," + std::to_string(h) + "} != 0";
            }
        }
    }
    return {};
}

std::string criterion_aspinwall_morrison()
{
    BpsTable single;
    single.set(0, 1, Rational(1));
    const GwPotential pot = gw_from_bps(single, 6, 4);
    for (int d = 1; d <= 6; ++d) {
        if (pot.at(0, d) != make_rational(1, d * d * d)) {
            return "N_{0," + std::to_string(d) + "} = " + to_string(pot.at(0, d));
        }
    }
    if (!(bps_from_gw(pot, 6) == single)) {
        return "inverse transform did not return the single-state table";
    }
    // d = 2: n_{0,2} = N_{0,2} - N_{0,1} / 8
    if (pot.at(0, 2) - pot.at(0, 1) / 8 != 0) {
        return "double cover relation";
    }
    return {};
}

std::string criterion_alternating_series()
{
    const RationalFunction r(Polynomial::monomial(Rational(1), 1), Polynomial::one_plus_q_pow(2));
    const RationalSeries s = ratfn_expand(r, 10);
    const long want[] = {0, 1, -2, 3, -4, 5, -6, 7, -8, 9, -10};
    for (int n = 0; n <= 10; ++n) {
        if (s.coefficient(n) != want[n]) {
            return "coefficient of q^" + std::to_string(n);
        }
    }
    return check_q_inversion_symmetry(r) ? std::string{} : "symmetry check returned false";
}

std::string criterion_substitution()
{
    const RationalFunction r(Polynomial::monomial(Rational(1), 1), Polynomial::one_plus_q_pow(2));
    const RationalSeries lhs = substitute_q_minus_exp(r, 12);
    const RationalSeries rhs = sine_bracket(1, 0, 12);
    if (!(lhs == rhs)) {
        return "sides differ at u^" + std::to_string(first_mismatch(lhs, rhs).value_or(12));
    }
    // u^-2 + 1/12 + u^2/240 + u^4/6048 + u^6/172800
    const std::pair<int, Rational> frozen[] = {{-2, Rational(1)},
                                               {0, make_rational(1, 12)},
                                               {2, make_rational(1, 240)},
                                               {4, make_rational(1, 6048)},
                                               {6, make_rational(1, 172800)}};
    for (const auto& [k, c] : frozen) {
        if (lhs.coefficient(k) != c) {
            return "frozen coefficient at u^" + std::to_string(k);
        }
    }
    return {};
}

std::string criterion_mnop()
{
    const KkvBpsGrid grid = bps_grid_from_kkv(HodgeLabel{3, 3}.required_grid_bound());
    for (int d = 1; d <= 3; ++d) {
        for (int h = 0; h <= 3; ++h) {
            const MnopReport r = mnop_check(HodgeLabel{d, h}, grid, 12);
            if (!r.equal) {
                return "(d=" + std::to_string(d) + ", h=" + std::to_string(h) + ") at u^" +
                       std::to_string(r.first_mismatch.value_or(12));
            }
        }
    }
    return {};
}

std::string criterion_properties()
{
    CheckOptions opt;
    opt.cases = 100;
    for (const auto& r : run_checks(opt)) {
        if (r.name == "properties") {
            return r.passed ? std::string{} : r.detail;
        }
    }
    return "property suite did not run";
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "KKV table reproduction", 1.0, criterion_table},
        {2, "Yau-Zaslow series and z = 1 specialization", 1.0, criterion_yau_zaslow},
        {3, "diagonal and vanishing laws, h <= 20", 0.0, criterion_diagonal},
        {4, "genus-zero multiple covers 1/d^3", 0.0, criterion_aspinwall_morrison},
        {5, "q/(1+q)^2 expansion and symmetry", 0.0, criterion_alternating_series},
        {6, "q = -e^{iu} substitution vs sine bracket", 0.0, criterion_substitution},
        {7, "local MNOP identity, d <= 3, h <= 3, u^12", 10.0, criterion_mnop},
        {8, "randomized property suites", 0.0, criterion_properties},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            failure = c.run();
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (failure.empty() && c.time_limit > 0 && secs >= c.time_limit) {
            failure = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.time_limit) + " s";
        }
        const bool ok = failure.empty();
        all = all && ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title;
        if (!ok) {
            std::cout << " -- " << failure;
        }
        std::cout << " (" << secs << " s)\n";
    }
    return all ? 0 : 1;
}
