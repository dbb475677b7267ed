#pragma once

#include <string>
#include <vector>

namespace riordan {

// One entry per acceptance criterion; `detail` explains a failure or
// summarizes what was checked.
struct CriterionResult {
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

// Replays the full worked-example and property suite. `filter` keeps
// only criteria whose name contains it (empty keeps all).
std::vector<CriterionResult> run_selftest(const std::string& filter = "");

}  // namespace riordan
