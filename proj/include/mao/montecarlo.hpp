#pragma once

#include <cstdint>
#include <vector>

#include "mao/model.hpp"
#include "mao/pmf.hpp"

namespace mao {

/// Splittable counter-keyed generator: every (seed, replicate) pair opens an
/// independent splitmix64 stream, so replicates can run on any worker in any
/// order with identical results.
class RandomStream {
  public:
    RandomStream(uint64_t seed, uint64_t replicate);

    uint64_t next_u64();
    /// Unbiased uniform draw in [0, bound), bound >= 1.
    uint64_t next_below(uint64_t bound);

  private:
    uint64_t state_;
};

/// Membership counts K_i for one replicate.
struct SampleOutcome {
    std::vector<int> K;  // length N, entries in {0..T}
};

struct SimulationResult {
    uint64_t seed = 0;
    long replicates = 0;
    std::vector<VariableSpec> specs;
    std::vector<std::vector<uint64_t>> histograms;  // per spec, counts over value 0..N
    std::vector<Pmf> empirical;                     // histograms / R
    std::vector<MomentReport> moments;
};

/// One replicate: T partial-shuffle draws without replacement.
SampleOutcome sample_once(const ModelParams& params, RandomStream& stream);

/// R replicates keyed by (seed, replicate index); results are identical for
/// any thread count.
SimulationResult simulate(const ModelParams& params, const std::vector<VariableSpec>& specs,
                          long replicates, uint64_t seed, int threads = 1);

}  // namespace mao
