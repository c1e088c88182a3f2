#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kkv {

/// Configuration of the identity suite run by `kkv check`.
struct CheckOptions {
    int h_max = 20;       // Yau-Zaslow agreement and diagonal/vanishing laws for h <= h_max
    int d_max = 3;        // local MNOP identity for grades 1..d_max
    int mnop_h_max = 3;   // ... and primitive squares 0..mnop_h_max
    int u_order = 12;
    std::uint64_t seed = 20140101;
    int cases = 100;      // per randomized property
    bool inject_fault = false;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

std::vector<CheckResult> run_checks(const CheckOptions& options);

} // namespace kkv
