#pragma once

#include <string>
#include <vector>

namespace cesaro {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    bool passed() const;
};

struct SuiteInfo {
    std::string name;
    std::string description;
};

/// special_fn, quadrature, kernels, operator_engine, symbols, calculus, cli.
const std::vector<SuiteInfo>& verification_suites();

/// Runs one suite. Errors raised by a check are recorded as failures.
/// Throws ConfigError for an unknown name.
SuiteReport run_suite(const std::string& name);

}  // namespace cesaro
