#include "kkv/checks.hpp"

#include "kkv/bps_transform.hpp"
#include "kkv/graded_series.hpp"
#include "kkv/kkv_engine.hpp"
#include "kkv/nl_correspondence.hpp"
#include "kkv/pairs_mnop.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace kkv {

namespace {

using Clock = std::chrono::steady_clock;

CheckResult timed(const std::string& name, const std::function<std::string()>& body)
{
    const auto start = Clock::now();
    CheckResult result{name, false, {}, 0.0};
    try {
        result.detail = body();
        result.passed = result.detail.empty();
        if (result.passed) {
            result.detail = "ok";
        }
    } catch (const std::exception& e) {
        result.detail = std::string("exception: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

Rational random_rational(std::mt19937_64& rng, long bound = 9)
{
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, 5);
    return make_rational(num(rng), den(rng));
}

RationalFunction random_ratfn(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> deg(0, 3);
    std::vector<Rational> num;
    std::vector<Rational> den;
    for (int i = 0, n = deg(rng); i <= n; ++i) {
        num.push_back(random_rational(rng));
    }
    for (int i = 0, n = deg(rng); i <= n; ++i) {
        den.push_back(random_rational(rng));
    }
    if (Polynomial(den).is_zero()) {
        den = {Rational(1)};
    }
    return RationalFunction(Polynomial(std::move(num)), Polynomial(std::move(den)));
}

const std::vector<std::vector<long>> kKkvTable = {
    {1, 24, 324, 3200, 25650},
    {0, -2, -54, -800, -8550},
    {0, 0, 3, 88, 1401},
    {0, 0, 0, -4, -126},
    {0, 0, 0, 0, 5},
};

std::string check_table()
{
    const KkvBpsGrid grid = bps_grid_from_kkv(4);
    for (int g = 0; g <= 4; ++g) {
        for (int h = 0; h <= 4; ++h) {
            if (grid.at(g, h) != kKkvTable[g][h]) {
                return "n_{" + std::to_string(g) + "," + std::to_string(h) + "} = " + to_string(grid.at(g, h)) +
                       ", expected " + std::to_string(kKkvTable[g][h]);
            }
        }
    }
    return {};
}

std::string check_yau_zaslow(int h_max)
{
    const RationalSeries yz = yau_zaslow_series(std::max(h_max, 4));
    for (int h = 0; h <= 4; ++h) {
        if (yz.coefficient(h) != kKkvTable[0][h]) {
            return "Yau-Zaslow coefficient q^" + std::to_string(h) + " = " + to_string(yz.coefficient(h));
        }
    }
    const KkvSeries product = kkv_product(h_max);
    for (int h = 0; h <= h_max; ++h) {
        if (product.coefficient(h).evaluate_at_one() != yz.coefficient(h)) {
            return "z -> 1 specialization disagrees at q^" + std::to_string(h);
        }
    }
    return {};
}

std::string check_diagonal(int h_max)
{
    const KkvBpsGrid grid = bps_grid_from_kkv(h_max);
    for (int h = 0; h <= h_max; ++h) {
        const Integer expected = (h % 2 == 0 ? 1 : -1) * (h + 1);
        if (grid.at(h, h) != expected) {
            return "n_{h,h} wrong at h=" + std::to_string(h);
        }
        for (int g = h + 1; g <= h_max; ++g) {
            if (grid.at(g, h) != 0) {
                return "n_{" + std::to_string(g) + "," + std::to_string(h) + "} != 0";
            }
        }
    }
    // The stored columns themselves must agree with the genus-0 row of the product.
    const RationalSeries yz = yau_zaslow_series(h_max);
    for (int h = 0; h <= h_max; ++h) {
        Rational at_one(0);
        for (int g = 0; g <= h; ++g) {
            // lambda^g vanishes at z = 1 for g >= 1, so only n_{0,h} survives.
            if (g == 0) {
                at_one += Rational(grid.at(0, h));
            }
        }
        if (at_one != yz.coefficient(h)) {
            return "genus-0 row differs from the Yau-Zaslow series at h=" + std::to_string(h);
        }
    }
    return {};
}

std::string check_aspinwall_morrison()
{
    BpsTable single;
    single.set(0, 1, Rational(1));
    const int d_max = 6;
    const int u_order = 4;
    const GwPotential pot = gw_from_bps(single, d_max, u_order);
    for (int d = 1; d <= d_max; ++d) {
        if (pot.at(0, d) != make_rational(1, static_cast<long>(d) * d * d)) {
            return "N_{0," + std::to_string(d) + "} = " + to_string(pot.at(0, d));
        }
    }
    const BpsTable back = bps_from_gw(pot, d_max);
    if (!(back == single)) {
        return "bps_from_gw did not recover the single-state table";
    }
    // n_{0,2} = N_{0,2} - N_{0,1}/8 on a perturbed potential.
    GwPotential bumped = pot;
    bumped.set(0, 2, Rational(pot.at(0, 2) + 5));
    const BpsTable b = bps_from_gw(bumped, 2);
    if (b.at(0, 2) != Rational(bumped.at(0, 2) - bumped.at(0, 1) / 8)) {
        return "genus-0 double cover relation failed";
    }
    return {};
}

std::string check_alternating_series()
{
    const RationalFunction r(Polynomial::monomial(Rational(1), 1), Polynomial::one_plus_q_pow(2));
    const RationalSeries s = ratfn_expand(r, 10);
    for (int n = 1; n <= 10; ++n) {
        const Rational expected = (n % 2 == 1 ? n : -n);
        if (s.coefficient(n) != expected) {
            return "coefficient of q^" + std::to_string(n) + " = " + to_string(s.coefficient(n));
        }
    }
    if (s.coefficient(0) != 0) {
        return "nonzero constant term";
    }
    if (!check_q_inversion_symmetry(r)) {
        return "q/(1+q)^2 reported asymmetric";
    }
    return {};
}

std::string check_substitution(int u_order)
{
    const RationalFunction r(Polynomial::monomial(Rational(1), 1), Polynomial::one_plus_q_pow(2));
    const RationalSeries lhs = substitute_q_minus_exp(r, u_order);
    const RationalSeries rhs = sine_bracket(1, 0, u_order);
    if (auto k = first_mismatch(lhs, rhs); k || lhs.order() != rhs.order()) {
        return "mismatch at u^" + std::to_string(k.value_or(lhs.order()));
    }
    return {};
}

std::string check_mnop_grid(const CheckOptions& opt)
{
    int bound = 0;
    for (int d = 1; d <= opt.d_max; ++d) {
        for (int h = 0; h <= opt.mnop_h_max; ++h) {
            bound = std::max(bound, HodgeLabel{d, h}.required_grid_bound());
        }
    }
    const KkvBpsGrid grid = bps_grid_from_kkv(bound);
    for (int d = 1; d <= opt.d_max; ++d) {
        for (int h = 0; h <= opt.mnop_h_max; ++h) {
            const HodgeLabel label{d, h};
            MnopReport report = mnop_check(label, grid, opt.u_order);
            if (opt.inject_fault && d == std::min(2, opt.d_max) && h == std::min(1, opt.mnop_h_max)) {
                // Test mode: perturb the pairs side by the constant 1.
                RationalFunction faulty = multiple_cover(label, grid) + RationalFunction(1);
                RationalSeries pairs = substitute_q_minus_exp(faulty, opt.u_order);
                report.first_mismatch = first_mismatch(report.gw_side, pairs);
                report.equal = !report.first_mismatch;
            }
            if (!report.equal) {
                std::ostringstream os;
                os << "(d=" << d << ", h=" << h << "): GW and pairs series differ";
                if (report.first_mismatch) {
                    os << " at u^" << *report.first_mismatch;
                }
                return os.str();
            }
        }
    }
    return {};
}

std::string check_properties(const CheckOptions& opt)
{
    std::mt19937_64 rng(opt.seed);

    // exp/log roundtrip on graded series of rational functions.
    for (int i = 0; i < opt.cases; ++i) {
        std::vector<RationalFunction> grades;
        for (int d = 1; d <= 4; ++d) {
            grades.push_back(random_ratfn(rng));
        }
        const GradedSeries<RationalFunction> g(grades);
        if (!(series_log(series_exp(g)) == g)) {
            return "exp/log roundtrip failed in case " + std::to_string(i);
        }
    }

    // GV transform roundtrip on random integer tables.
    std::uniform_int_distribution<long> entry(-20, 20);
    for (int i = 0; i < opt.cases; ++i) {
        BpsTable t;
        for (int d = 1; d <= 3; ++d) {
            for (int g = 0; g <= 3; ++g) {
                t.set(g, d, Rational(entry(rng)));
            }
        }
        const int u_order = 8;
        if (!(bps_from_gw(gw_from_bps(t, 3, u_order), 3) == t)) {
            return "GV roundtrip failed in case " + std::to_string(i);
        }
    }

    // lambda-basis roundtrip on random symmetric Laurent polynomials.
    std::uniform_int_distribution<int> degree(0, 6);
    for (int i = 0; i < opt.cases; ++i) {
        const int d = degree(rng);
        std::vector<Rational> half;
        for (int k = 0; k <= d; ++k) {
            half.push_back(random_rational(rng));
        }
        std::vector<Rational> full;
        for (int k = -d; k <= d; ++k) {
            full.push_back(half[static_cast<std::size_t>(std::abs(k))]);
        }
        const SymLaurentPoly p(LaurentPolynomial(-d, full));
        if (!(lambda_recompose(lambda_decompose(p)) == p)) {
            return "lambda roundtrip failed in case " + std::to_string(i);
        }
    }

    // q <-> 1/q symmetry of every generated pairs function with h <= 5, d <= 4.
    {
        const KkvBpsGrid grid = bps_grid_from_kkv(HodgeLabel{4, 5}.required_grid_bound());
        std::vector<RationalFunction> functions;
        for (int h = 0; h <= 5; ++h) {
            for (int d = 1; d <= 4; ++d) {
                functions.push_back(multiple_cover(HodgeLabel{d, h}, grid));
                if (!check_q_inversion_symmetry(functions.back())) {
                    return "pairs function (d=" + std::to_string(d) + ", h=" + std::to_string(h) +
                           ") is not q <-> 1/q symmetric";
                }
            }
        }
        std::uniform_int_distribution<std::size_t> pick(0, functions.size() - 1);
        int evaluated = 0;
        while (evaluated < opt.cases) {
            const Rational x = random_rational(rng);
            if (sgn(x) == 0 || x == -1 || x == 1) {
                continue;
            }
            const RationalFunction& r = functions[pick(rng)];
            if (r.evaluate(x) != r.evaluate(Rational(1 / x))) {
                return "r(x) != r(1/x) at x = " + to_string(x);
            }
            ++evaluated;
        }
    }

    // NL combine/invert roundtrip and fault detection in transfer_mnop.
    {
        const std::vector<ClassLabel> labels = {{1, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 5}};
        const KkvBpsGrid grid = bps_grid_from_kkv(required_grid_bound(labels));
        const int u_order = opt.u_order;
        const auto k3_gw = k3_gw_vector(labels, grid, u_order);
        const auto k3_pairs = k3_pairs_vector(labels, grid);
        const auto fibres = fibre_classes(labels.size());
        std::uniform_int_distribution<std::size_t> which(0, labels.size() - 1);
        std::uniform_int_distribution<int> power(-3, 3);
        for (int i = 0; i < opt.cases; ++i) {
            const NlMatrix nl = NlMatrix::random_invertible(fibres, labels, rng);
            const auto fib_gw = combine(k3_gw, nl);
            const auto fib_pairs = combine(k3_pairs, nl);
            if (!(invert_correspondence(fib_gw, nl) == k3_gw) || !(invert_correspondence(fib_pairs, nl) == k3_pairs)) {
                return "NL combine/invert roundtrip failed in case " + std::to_string(i);
            }
            if (!transfer_mnop(fib_gw, fib_pairs, nl, u_order).consistent) {
                return "transfer_mnop rejected consistent data in case " + std::to_string(i);
            }
            Rational c = random_rational(rng);
            if (sgn(c) == 0) {
                c = 1;
            }
            auto faulty = fib_pairs;
            faulty.values[which(rng)] += RationalFunction::monomial(c, power(rng));
            const TransferReport report = transfer_mnop(fib_gw, faulty, nl, u_order);
            if (report.consistent || !report.failing) {
                return "injected pairs fault went undetected in case " + std::to_string(i);
            }
        }
    }
    return {};
}

} // namespace

std::vector<CheckResult> run_checks(const CheckOptions& opt)
{
    std::vector<CheckResult> out;
    out.push_back(timed("kkv-table", check_table));
    out.push_back(timed("yau-zaslow", [&] { return check_yau_zaslow(opt.h_max); }));
    out.push_back(timed("diagonal-and-vanishing", [&] { return check_diagonal(opt.h_max); }));
    out.push_back(timed("aspinwall-morrison", check_aspinwall_morrison));
    out.push_back(timed("alternating-series", check_alternating_series));
    out.push_back(timed("substitution-identity", [&] { return check_substitution(opt.u_order); }));
    out.push_back(timed("local-mnop", [&] { return check_mnop_grid(opt); }));
    out.push_back(timed("properties", [&] { return check_properties(opt); }));
    return out;
}

} // namespace kkv
