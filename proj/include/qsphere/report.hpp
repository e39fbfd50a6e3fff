// Named verification suites with per-check records, shared by the CLI and
// the acceptance runner. Each check is independent; failures are recorded,
// not thrown.
#pragma once

#include "qsphere/scalar.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qsphere {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct SuiteConfig {
    Rational q0 = Rational(1, 2);  // numeric specialization point, 0 < q0 < 1
    int cutoff = 40;               // Fock truncation N
    int degree_bound = 4;          // word-degree bound for slices/witnesses
    long step_limit = 100000;      // rewrite-step guard per normal form
    void validate() const;         // throws ConfigError
};

struct CheckResult {
    std::string id;
    std::string anchor;   // topic tag, or "plumbing"
    std::string status;   // "pass" | "fail" | "error" | "vacuous"
    std::string expected;
    std::string actual;
    double elapsed_ms = 0.0;
    bool ok() const { return status == "pass" || status == "vacuous"; }
};

using Suite = std::vector<CheckResult>;

/// The six runnable suite names, in canonical order (excludes "all").
const std::vector<std::string>& suite_names();

/// Run one named suite; "all" concatenates the six in order.
/// Throws ConfigError for an unknown name or invalid config.
Suite run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace qsphere
