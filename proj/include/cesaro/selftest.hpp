#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cesaro {

struct SelftestOptions {
    std::string filter;          // substring of "module/name"; empty runs everything
    bool inject_fault = false;   // perturb quadrature weights by 1e-3; the suite must notice
    std::uint64_t seed = 20240611;
};

struct CheckResult {
    std::string module;
    std::string name;
    bool pass = false;
    double value = 0.0;   // the measured quantity
    double bound = 0.0;   // what it was compared against
    double seconds = 0.0;
    std::string detail;
};

/// Names of all checks as "module/name".
std::vector<std::string> selftest_names();

std::vector<CheckResult> run_selftest(const SelftestOptions& options = {});

/// Fixed-width pass/fail table.
std::string selftest_table(const std::vector<CheckResult>& results);

} // namespace cesaro
