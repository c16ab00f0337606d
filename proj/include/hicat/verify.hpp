#pragma once

// Cross-verification harness: every identity the library claims, run over
// fixed default ranges and reported case by case.  Each case compares an
// expected value (closed form) against an actual value (independent route:
// series expansion, exhaustive enumeration, or the gluing oracle) as exact
// decimal strings.  Reports are deterministic apart from elapsed_ms; cases
// appear sorted by their input tuple.

#include <string>
#include <utility>
#include <vector>

#include "hicat/gluing.hpp"

namespace hicat {

struct VerifyCase {
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<VerifyCase> cases;
    int passed = 0;
    long long elapsed_ms = 0;

    int total() const { return static_cast<int>(cases.size()); }
};

struct VerifyOptions {
    // When >= 0, the case with this global index (counting across all
    // executed suites in order) has its computed value perturbed before
    // comparison.  Exists so the harness can prove it would catch a wrong
    // value: any in-range index must flip the exit status.
    int mutate_index = -1;
    int dart_guard = kDefaultDartGuard;
    int threads = 1;
};

struct VerifyResult {
    std::vector<SuiteReport> suites;

    int total() const;
    int passed() const;
    long long elapsed_ms() const;
    bool all_passed() const { return passed() == total(); }
};

// Canonical suite order for --suite all.
const std::vector<std::string>& suite_names();

bool is_suite_name(const std::string& name);

// Run the named suites (each name from suite_names(), or "all").
VerifyResult run_suites(const std::vector<std::string>& names,
                        const VerifyOptions& options = {});

// The machine-readable report document (see README for the schema).
std::string report_json(const VerifyResult& result);

// A short human-readable per-suite table.
std::string report_table(const VerifyResult& result);

}  // namespace hicat
