#pragma once

#include <cstdint>

#include "mao/exact_dist.hpp"
#include "mao/model.hpp"
#include "mao/pmf.hpp"

namespace mao {

enum class MomentMethod { formula, exact_dp, monte_carlo };

struct MomentOptions {
    NumericMode mode = NumericMode::exact;  // exact_dp arithmetic
    size_t state_budget = kDefaultStateBudget;
    long replicates = 100'000;  // monte_carlo
    uint64_t seed = 0;
    int threads = 1;
};

/// Four moments of the requested variable via the requested route.
MomentReport moment_report(const ModelParams& params, const VariableSpec& var, MomentMethod method,
                           const MomentOptions& options = {});

}  // namespace mao
