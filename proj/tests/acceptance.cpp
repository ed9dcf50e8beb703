// Runs the full verification suite and prints one pass/fail line per
// criterion.  Exit status is nonzero when any criterion fails.

#include <cstdio>

#include "mao/verify.hpp"

int main() {
    const mao::VerifyReport report = mao::run_verification();
    for (const auto& c : report.criteria) {
        std::printf("[%2d] %s  %-44s (%6.1fs)  %s\n", c.id, c.pass ? "PASS" : "FAIL",
                    c.name.c_str(), c.seconds, c.details.c_str());
        std::fflush(stdout);
    }
    if (!report.all_pass()) {
        std::printf("verification FAILED\n");
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
