#pragma once

#include <string>
#include <vector>

namespace mao {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string details;  // measured values, worst offenders
    double seconds = 0;
};

struct VerifyReport {
    std::vector<CriterionResult> criteria;
    bool all_pass() const;
};

/// Runs the full verification suite (moment tables, recursion/ formula
/// agreement, Monte Carlo, limit-theorem diagnostics).
VerifyReport run_verification();

}  // namespace mao
