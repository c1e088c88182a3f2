#include "kkv/checks.hpp"
#include "kkv/serialize.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace kkv;

enum class Format { json, csv, pretty };

struct RunConfig {
    Format format = Format::pretty;
    std::optional<std::string> out;
    std::uint64_t seed = 20140101;

    int h_max = 4;
    std::optional<int> g_max;
    int d_max = 3;
    int h = 0;
    int d = 1;
    int u_order = 12;
    int q_order = 10;
    int cases = 100;
    bool single_state = false;
    bool check_symmetry = false;
    bool inject_fault = false;
};

// Usage problems detected after parsing; reported with exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_nonnegative(int value, const char* flag)
{
    if (value < 0) {
        throw ConfigError(std::string(flag) + " must be >= 0");
    }
}

void require_u_order(int u_order)
{
    if (u_order <= 0 || u_order % 2 != 0) {
        throw ConfigError("--umax must be a positive even integer");
    }
}

void require_format(const RunConfig& cfg, bool csv_ok)
{
    if (cfg.format == Format::csv && !csv_ok) {
        throw ConfigError("csv output is only available for the table command");
    }
}

void emit(const RunConfig& cfg, const std::string& text)
{
    if (!cfg.out) {
        std::cout << text;
        return;
    }
    std::ofstream file(*cfg.out);
    if (!file) {
        throw ConfigError("cannot open " + *cfg.out + " for writing");
    }
    file << text;
}

void emit_json(const RunConfig& cfg, const Json& j) { emit(cfg, j.dump(2) + "\n"); }

template <typename T>
std::string str(const T& value)
{
    std::ostringstream os;
    os << value;
    return os.str();
}

// ---------------------------------------------------------------- commands

int cmd_table(const RunConfig& cfg)
{
    require_nonnegative(cfg.h_max, "--hmax");
    require_format(cfg, true);
    const int g_max = cfg.g_max.value_or(cfg.h_max);
    require_nonnegative(g_max, "--gmax");
    spdlog::info("computing KKV grid to h = {}", cfg.h_max);
    const KkvBpsGrid grid = bps_grid_from_kkv(cfg.h_max);
    switch (cfg.format) {
    case Format::json: {
        Json j = to_json(grid);
        auto& rows = j["rows"];
        if (static_cast<int>(rows.size()) > g_max + 1) {
            rows.erase(rows.begin() + g_max + 1, rows.end());
        }
        emit_json(cfg, j);
        break;
    }
    case Format::csv: {
        std::istringstream in(grid_to_csv(grid));
        std::string line;
        std::string text;
        for (int row = -1; std::getline(in, line) && row <= g_max; ++row) {
            text += line + "\n";
        }
        emit(cfg, text);
        break;
    }
    case Format::pretty: {
        std::ostringstream os;
        os << "n_{g,h}";
        for (int h = 0; h <= cfg.h_max; ++h) {
            os << "\th=" << h;
        }
        os << "\n";
        for (int g = 0; g <= g_max; ++g) {
            os << "g=" << g;
            for (int h = 0; h <= cfg.h_max; ++h) {
                os << "\t" << grid.at(g, h);
            }
            os << "\n";
        }
        emit(cfg, os.str());
        break;
    }
    }
    return 0;
}

int cmd_gw(const RunConfig& cfg)
{
    require_nonnegative(cfg.h, "--h");
    require_format(cfg, false);
    if (cfg.d_max < 1) {
        throw ConfigError("--dmax must be >= 1");
    }
    require_u_order(cfg.u_order);
    BpsTable table;
    if (cfg.single_state) {
        table.set(0, 1, Rational(1));
    } else {
        const int bound = HodgeLabel{cfg.d_max, cfg.h}.required_grid_bound();
        spdlog::info("computing KKV grid to h = {}", bound);
        table = kkv_bps_table(bps_grid_from_kkv(bound), cfg.h, cfg.d_max);
    }
    const GwPotential pot = gw_from_bps(table, cfg.d_max, cfg.u_order);
    const int g_max = std::min(cfg.g_max.value_or(pot.max_genus()), pot.max_genus());
    if (cfg.format == Format::json) {
        Json j = to_json(pot);
        j["bps"] = to_json(table);
        emit_json(cfg, j);
        return 0;
    }
    std::ostringstream os;
    for (int d = 1; d <= cfg.d_max; ++d) {
        for (int g = 0; g <= g_max; ++g) {
            os << "N_{" << g << "," << d << "} = " << to_string(pot.at(g, d)) << "\n";
        }
    }
    emit(cfg, os.str());
    return 0;
}

int cmd_pairs(const RunConfig& cfg)
{
    require_nonnegative(cfg.h, "--h");
    require_nonnegative(cfg.q_order, "--qmax");
    require_format(cfg, false);
    if (cfg.d < 1) {
        throw ConfigError("--d must be >= 1");
    }
    const HodgeLabel label{cfg.d, cfg.h};
    const KkvBpsGrid grid = bps_grid_from_kkv(label.required_grid_bound());
    const RationalFunction r = multiple_cover(label, grid);
    const RationalSeries expansion = ratfn_expand(r, cfg.q_order);
    std::optional<bool> symmetric;
    if (cfg.check_symmetry) {
        symmetric = check_q_inversion_symmetry(r);
    }
    if (cfg.format == Format::json) {
        Json j{{"d", cfg.d}, {"h", cfg.h}, {"function", to_json(r)}, {"expansion", to_json(expansion)}};
        if (symmetric) {
            j["symmetric"] = *symmetric;
        }
        emit_json(cfg, j);
    } else {
        std::ostringstream os;
        os << "Z(q) = " << r << "\n";
        os << "     = " << expansion << "\n";
        if (symmetric) {
            os << "symmetric: " << (*symmetric ? "true" : "false") << "\n";
        }
        emit(cfg, os.str());
    }
    return symmetric.value_or(true) ? 0 : 1;
}

int cmd_mnop_check(const RunConfig& cfg, bool single_label)
{
    require_u_order(cfg.u_order);
    require_format(cfg, false);
    std::vector<HodgeLabel> labels;
    if (single_label) {
        require_nonnegative(cfg.h, "--h");
        if (cfg.d < 1) {
            throw ConfigError("--d must be >= 1");
        }
        labels.push_back({cfg.d, cfg.h});
    } else {
        require_nonnegative(cfg.h_max, "--hmax");
        if (cfg.d_max < 1) {
            throw ConfigError("--dmax must be >= 1");
        }
        for (int d = 1; d <= cfg.d_max; ++d) {
            for (int h = 0; h <= cfg.h_max; ++h) {
                labels.push_back({d, h});
            }
        }
    }
    int bound = 0;
    for (const auto& l : labels) {
        bound = std::max(bound, l.required_grid_bound());
    }
    const KkvBpsGrid grid = bps_grid_from_kkv(bound);
    Json reports = Json::array();
    std::ostringstream os;
    bool all = true;
    for (const auto& l : labels) {
        const MnopReport report = mnop_check(l, grid, cfg.u_order);
        all = all && report.equal;
        Json j = to_json(report);
        j["d"] = l.d;
        j["h"] = l.h;
        reports.push_back(std::move(j));
        os << "(d=" << l.d << ", h=" << l.h << ") " << (report.equal ? "ok" : "MISMATCH");
        if (report.first_mismatch) {
            os << " at u^" << *report.first_mismatch;
        }
        os << "\n";
        spdlog::debug("(d={}, h={}) GW side {}", l.d, l.h, str(report.gw_side));
    }
    if (cfg.format == Format::json) {
        emit_json(cfg, Json{{"u_order", cfg.u_order}, {"all_equal", all}, {"reports", reports}});
    } else {
        emit(cfg, os.str());
    }
    return all ? 0 : 1;
}

int cmd_yau_zaslow(const RunConfig& cfg)
{
    require_nonnegative(cfg.h_max, "--hmax");
    require_format(cfg, false);
    const RationalSeries yz = yau_zaslow_series(cfg.h_max);
    const KkvSeries product = kkv_product(cfg.h_max);
    int disagree = -1;
    for (int h = 0; h <= cfg.h_max && disagree < 0; ++h) {
        if (product.coefficient(h).evaluate_at_one() != yz.coefficient(h)) {
            disagree = h;
        }
    }
    if (cfg.format == Format::json) {
        Json j{{"series", to_json(yz)}, {"matches_kkv_at_z_1", disagree < 0}};
        if (disagree >= 0) {
            j["first_mismatch"] = disagree;
        }
        emit_json(cfg, j);
    } else {
        std::ostringstream os;
        for (int h = 0; h <= cfg.h_max; ++h) {
            os << "q^" << h << "\t" << to_string(yz.coefficient(h)) << "\n";
        }
        os << "KKV product at z = 1: " << (disagree < 0 ? "agrees" : "differs at q^" + std::to_string(disagree))
           << "\n";
        emit(cfg, os.str());
    }
    return disagree < 0 ? 0 : 1;
}

int cmd_nl_demo(const RunConfig& cfg)
{
    require_u_order(cfg.u_order);
    require_format(cfg, false);
    const std::vector<ClassLabel> labels = {{1, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 5}};
    std::mt19937_64 rng(cfg.seed);
    const KkvBpsGrid grid = bps_grid_from_kkv(required_grid_bound(labels));
    NlMatrix nl = NlMatrix::random_invertible(fibre_classes(labels.size()), labels, rng);
    SyntheticFibration fib = make_synthetic_fibration(labels, grid, nl, cfg.u_order);
    if (cfg.inject_fault) {
        // Test mode: break the pairs side of the first fibre class.
        fib.pairs.values.front() += RationalFunction::monomial(Rational(1), 1);
    }
    const TransferReport report = transfer_mnop(fib.gw, fib.pairs, fib.nl, cfg.u_order);
    if (cfg.format == Format::json) {
        emit_json(cfg, Json{{"nl_matrix", to_json(fib.nl)}, {"report", to_json(report)}});
    } else {
        std::ostringstream os;
        os << (report.consistent ? "consistent" : "INCONSISTENT");
        if (report.failing) {
            os << " at " << to_string(*report.failing);
        }
        os << ": " << report.reason << "\n";
        emit(cfg, os.str());
    }
    return report.consistent ? 0 : 1;
}

int cmd_check(const RunConfig& cfg)
{
    require_nonnegative(cfg.h_max, "--hmax");
    require_u_order(cfg.u_order);
    require_format(cfg, false);
    if (cfg.d_max < 1) {
        throw ConfigError("--dmax must be >= 1");
    }
    if (cfg.cases < 1) {
        throw ConfigError("--cases must be >= 1");
    }
    CheckOptions opt;
    opt.h_max = cfg.h_max;
    opt.d_max = cfg.d_max;
    opt.u_order = cfg.u_order;
    opt.seed = cfg.seed;
    opt.cases = cfg.cases;
    opt.inject_fault = cfg.inject_fault;
    const auto results = run_checks(opt);
    bool all = true;
    Json j = Json::array();
    std::ostringstream os;
    for (const auto& r : results) {
        all = all && r.passed;
        j.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        os << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.seconds << " s)";
        if (!r.passed) {
            os << ": " << r.detail;
        }
        os << "\n";
    }
    if (cfg.format == Format::json) {
        emit_json(cfg, Json{{"all_passed", all}, {"checks", j}});
    } else {
        emit(cfg, os.str());
    }
    return all ? 0 : 1;
}

void configure_logging()
{
    auto logger = spdlog::stderr_color_st("kkv");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::warn);
    if (const char* level = std::getenv("KKV_LOG")) {
        spdlog::set_level(spdlog::level::from_str(level));
    }
}

} // namespace

int main(int argc, char** argv)
{
    configure_logging();
    RunConfig cfg;
    CLI::App app{"K3 curve counting: KKV tables, GW/pairs series and the local MNOP identity"};
    // --h is the square label, so help is long-form only.
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);
    const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"pretty", Format::pretty}};
    app.add_option("--format", cfg.format, "json, csv (table only) or pretty")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->option_text("json|csv|pretty");
    app.add_option("--out", cfg.out, "write output to this file instead of stdout");
    app.add_option("--seed", cfg.seed, "seed for randomized runs");
    app.fallthrough();

    auto* table = app.add_subcommand("table", "BPS numbers n_{g,h} from the KKV product");
    table->add_option("--hmax", cfg.h_max, "largest h")->capture_default_str();
    table->add_option("--gmax", cfg.g_max, "largest genus row (default: hmax)");

    auto* gw = app.add_subcommand("gw", "GW invariants N_{g,d beta} from BPS data");
    gw->add_option("--h", cfg.h, "square 2h-2 of the primitive class")->capture_default_str();
    gw->add_option("--dmax", cfg.d_max, "largest multiple d")->capture_default_str();
    gw->add_option("--umax", cfg.u_order, "u truncation order (even)")->capture_default_str();
    gw->add_option("--gmax", cfg.g_max, "largest genus printed");
    gw->add_flag("--single-state", cfg.single_state, "use the table with n_{0,1} = 1 only");

    auto* pairs = app.add_subcommand("pairs", "connected pairs series of d beta");
    pairs->add_option("--h", cfg.h, "square 2h-2 of the primitive class")->capture_default_str();
    pairs->add_option("--d", cfg.d, "multiple d")->capture_default_str();
    pairs->add_option("--qmax", cfg.q_order, "q expansion order")->capture_default_str();
    pairs->add_flag("--check-symmetry", cfg.check_symmetry, "verify q <-> 1/q invariance");

    auto* mnop = app.add_subcommand("mnop-check", "compare GW and pairs series at q = -e^{iu}");
    std::optional<int> mnop_h;
    std::optional<int> mnop_d;
    mnop->add_option("--h", mnop_h, "single square label (default: all h <= hmax)");
    mnop->add_option("--d", mnop_d, "single multiple (default: all d <= dmax)");
    int mnop_hmax = 3;
    mnop->add_option("--hmax", mnop_hmax, "largest h of the grid")->capture_default_str();
    mnop->add_option("--dmax", cfg.d_max, "largest d of the grid")->capture_default_str();
    mnop->add_option("--umax", cfg.u_order, "u truncation order (even)")->capture_default_str();

    auto* yz = app.add_subcommand("yau-zaslow", "coefficients of prod (1-q^n)^-24");
    int yz_hmax = 20;
    yz->add_option("--hmax", yz_hmax, "largest h")->capture_default_str();

    auto* nl = app.add_subcommand("nl-demo", "transfer the local identity through a random NL matrix");
    nl->add_option("--umax", cfg.u_order, "u truncation order (even)")->capture_default_str();
    nl->add_flag("--inject-fault", cfg.inject_fault, "test mode: corrupt one pairs entry");

    auto* check = app.add_subcommand("check", "run the identity suite");
    int check_hmax = 20;
    check->add_option("--hmax", check_hmax, "bound for the KKV and Yau-Zaslow checks")->capture_default_str();
    check->add_option("--dmax", cfg.d_max, "largest d in the MNOP grid")->capture_default_str();
    check->add_option("--umax", cfg.u_order, "u truncation order (even)")->capture_default_str();
    check->add_option("--cases", cfg.cases, "random cases per property")->capture_default_str();
    check->add_flag("--inject-fault", cfg.inject_fault, "test mode: corrupt one MNOP comparison");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*table) {
            return cmd_table(cfg);
        }
        if (*gw) {
            return cmd_gw(cfg);
        }
        if (*pairs) {
            return cmd_pairs(cfg);
        }
        if (*mnop) {
            const bool single = mnop_h.has_value() || mnop_d.has_value();
            if (single) {
                cfg.h = mnop_h.value_or(0);
                cfg.d = mnop_d.value_or(1);
            }
            cfg.h_max = mnop_hmax;
            return cmd_mnop_check(cfg, single);
        }
        if (*yz) {
            cfg.h_max = yz_hmax;
            return cmd_yau_zaslow(cfg);
        }
        if (*nl) {
            return cmd_nl_demo(cfg);
        }
        if (*check) {
            cfg.h_max = check_hmax;
            return cmd_check(cfg);
        }
    } catch (const ConfigError& e) {
        std::cerr << "kkv: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "kkv: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
