#pragma once

#include <functional>
#include <string>
#include <vector>

namespace cartan {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    // Failed, but the failure is understood and documented (see analysis).
    bool known_red = false;
    std::string detail;
    std::string analysis;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    // Directory with the frozen witness fixtures; empty skips the replay.
    std::string fixture_dir;
    std::function<void(const CriterionResult&)> on_result;
};

inline constexpr int kCriterionCount = 12;
inline constexpr double kSuiteTimeLimitSeconds = 600.0;

// Criteria 1..11; criterion 12 needs the suite time and is only produced by
// run_acceptance.
CriterionResult run_criterion(int id, const AcceptanceOptions& options);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

// Failure of a criterion on this list is reported but does not fail the suite.
bool is_known_red(int id);

std::string witness_fixture_name(int criterion);

// One line per criterion: "[PASS] 01 title: detail (1.23 s)".
std::string format_result(const CriterionResult& r);

}  // namespace cartan
