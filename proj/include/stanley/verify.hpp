#pragma once

#include <string>
#include <vector>

#include "stanley/permutation.hpp"

namespace stanley {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    int workers = 1;
    std::string fixture_dir;         // directory holding the pattern list files
    int max_n = 0;                   // 0 = each suite's standard scale
    unsigned long long samples = 0;  // 0 = suite default
};

/// Reads a pattern list file, one permutation per line.
std::vector<Permutation> load_pattern_fixture(const std::string& path);

// The suites; each runs a self-contained check at its standard scale
// (optionally rescaled through the options) and reports pass/fail.
SuiteResult verify_three_route(const VerifyOptions& opt = {});
SuiteResult verify_word_count_identity(const VerifyOptions& opt = {});
SuiteResult verify_golden_examples(const VerifyOptions& opt = {});
SuiteResult verify_two_vexillary(const VerifyOptions& opt = {});
SuiteResult verify_three_vexillary(const VerifyOptions& opt = {});
SuiteResult verify_forest(const VerifyOptions& opt = {});
SuiteResult verify_essential(const VerifyOptions& opt = {});
SuiteResult verify_shape_injection(const VerifyOptions& opt = {});
SuiteResult verify_skeleton_witness(const VerifyOptions& opt = {});
SuiteResult verify_code_patterns(const VerifyOptions& opt = {});
SuiteResult verify_determinism(const VerifyOptions& opt = {});

/// Runs the named suite ("three-route", "redwords", "golden", "two-vex",
/// "three-vex", "forest", "essential", "injection", "skeleton", including
/// "code-patterns" and "determinism"); "all" runs everything in order.
std::vector<SuiteResult> run_verify_suite(const std::string& name,
                                          const VerifyOptions& opt = {});

}  // namespace stanley
