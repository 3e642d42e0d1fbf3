#pragma once

#include "hqm/phipoly.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace hqm {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    long ms = 0;
};

struct SelftestOptions {
    // Source of phi_m for the f_phi route; replaceable for fault injection.
    std::function<YPoly(int)> phi = [](int m) { return phi_cached(m); };
    int fit_dmax = 40;
};

inline constexpr int kCheckCount = 11;

CheckResult run_check(int id, const SelftestOptions& opt = {});
std::vector<CheckResult> run_selftest(const SelftestOptions& opt = {});

/// "[PASS] 03 name (12 ms): detail"
std::string format_check(const CheckResult& r);

} // namespace hqm
