#pragma once

#include <string>
#include <vector>

namespace torus {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;  // first mismatch, or a short summary when passing
    double seconds = 0;
};

inline constexpr int kCriterionCount = 9;

// Runs one acceptance criterion (1..9) for n = 5 with the given sampling seed.
CriterionResult run_criterion(int id, unsigned seed = 7);
std::vector<CriterionResult> run_acceptance(unsigned seed = 7);

}  // namespace torus
