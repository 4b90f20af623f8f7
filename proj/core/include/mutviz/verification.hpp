#pragma once

// The acceptance suite: every recorded value and bound the toolkit is
// expected to reproduce, each as one pass/fail criterion.  Shared by the
// acceptance test binary and the verify CLI command.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mutviz {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    bool skipped = false;  // long-running criterion not requested
    std::string detail;
    double seconds = 0;
};

struct VerificationOptions {
    bool include_long = false;
    int parallel = 0;
    std::uint64_t seed = 961748941;
    // Called after each criterion finishes, for streaming output.
    std::function<void(const CriterionResult&)> on_result;
};

std::vector<CriterionResult> run_verification(const VerificationOptions& opts = {});

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace mutviz
