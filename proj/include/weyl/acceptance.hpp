#pragma once

#include <string>
#include <vector>

namespace weyl {

/// One acceptance criterion outcome. `details` carries the measured values
/// (one line each) so failures are diagnosable from the log alone.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::vector<std::string> details;
};

/// Runs acceptance criterion `id` (1..12).
CriterionResult run_criterion(int id);

/// Runs all 12 criteria in order.
std::vector<CriterionResult> run_acceptance();

constexpr int kCriterionCount = 12;

}  // namespace weyl
