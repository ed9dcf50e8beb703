#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "mao/model.hpp"
#include "mao/pmf.hpp"

namespace mao {

/// Occupancy profile after j rounds: c[i] = individuals in exactly i of the
/// first j subsets.  Stored packed into a 64-bit key inside distributions.
struct OccupancyProfile {
    std::vector<long> c;

    int rounds() const { return static_cast<int>(c.size()) - 1; }
    long population() const;
    long membership_mass() const;  // sum_i i * c[i]
};

/// Exact joint law of the occupancy profile.  Probabilities are stored as
/// integer weights over a common denominator (the product of the per-round
/// C(N, m_j)), which keeps the recursion in pure integer arithmetic.
struct ProfileDistribution {
    long N = 0;
    int rounds = 0;
    NumericMode mode = NumericMode::exact;
    std::unordered_map<uint64_t, Integer> weights;   // exact mode
    std::unordered_map<uint64_t, double> float_probs;  // float mode
    Integer denominator = 1;

    size_t state_count() const {
        return mode == NumericMode::exact ? weights.size() : float_probs.size();
    }
    Rational probability(const OccupancyProfile& profile) const;
    std::vector<std::pair<OccupancyProfile, Rational>> entries() const;

    static ProfileDistribution initial(long N, NumericMode mode);
};

/// Profile-key packing; throws when (rounds+1) classes of values up to N do
/// not fit in 64 bits.
uint64_t pack_profile(const std::vector<long>& c, long N);
std::vector<long> unpack_profile(uint64_t key, int nclasses, long N);

inline constexpr size_t kDefaultStateBudget = 10'000'000;

/// One round of the recursion: split each profile class by the multivariate
/// hypergeometric allocation of the next subset.
ProfileDistribution advance(const ProfileDistribution& dist, long m_next,
                            size_t state_budget = kDefaultStateBudget);

/// Full T-round law.  Rounds are processed in decreasing size order (the
/// final law is invariant under round order) to keep the recursion small.
ProfileDistribution exact_profile_distribution(const ModelParams& params,
                                               NumericMode mode = NumericMode::exact,
                                               size_t state_budget = kDefaultStateBudget);

/// Aggregate a final profile law into the pmf of one count variable.
Pmf marginal_pmf(const ProfileDistribution& dist, const VariableSpec& var);

/// Pmf of a single variable without materialising the final joint law: the
/// recursion runs through T-1 rounds and the last round is projected onto
/// the one or two profile classes the variable depends on.
Pmf exact_marginal_pmf(const ModelParams& params, const VariableSpec& var,
                       NumericMode mode = NumericMode::exact,
                       size_t state_budget = kDefaultStateBudget);

/// Prefix law (first T-1 rounds) for callers that project several variables
/// from one model; pair with project_last_round.
ProfileDistribution prefix_profile_distribution(const ModelParams& params, NumericMode mode,
                                                size_t state_budget = kDefaultStateBudget);
Pmf project_last_round(const ProfileDistribution& prefix, long m_last, const VariableSpec& var);

}  // namespace mao
