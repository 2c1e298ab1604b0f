#ifndef NETCODE_SUITES_HPP
#define NETCODE_SUITES_HPP

/**
 * Named verification suites.  Each suite drives a closed form against its
 * independent oracle, or a decoder guarantee against exhaustive desk-scale
 * evidence, and reports pass/fail with a check count and the first
 * counterexample when one exists.  Suites never sample silently: everything
 * here is a complete sweep of its stated scope.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace netcode {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::uint64_t checks = 0; // individual comparisons performed
    double seconds = 0.0;
    /// Scope summary when passing, first counterexample when failing.
    std::string detail;
};

/// Registered suite names in canonical order.
std::vector<std::string> suite_names();

/// Runs one suite by name; throws unknown_input for an unregistered name.
SuiteResult run_suite(const std::string& name);

/// Runs every suite in canonical order.
std::vector<SuiteResult> run_all_suites();

} // namespace netcode

#endif
