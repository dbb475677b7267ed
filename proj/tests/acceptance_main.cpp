// Acceptance suite: replays every verification criterion and prints one
// PASS/FAIL line per criterion. Exit status is the number of failures.
#include <cstdio>

#include "riordan/selftest.hpp"

int main() {
    std::vector<riordan::CriterionResult> results = riordan::run_selftest();
    int failures = 0;
    for (const auto& r : results) {
        std::printf("[%s] %-34s (%.2fs) %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.seconds, r.detail.c_str());
        if (!r.pass) ++failures;
    }
    std::printf("%zu criteria, %d failed\n", results.size(), failures);
    return failures;
}
