#pragma once

#include <map>

#include "mao/exact_dist.hpp"
#include "mao/model.hpp"

namespace mao {

/// Exhaustive ground truth: every tuple of subsets, each equally likely.
struct ExhaustiveLaw {
    ProfileDistribution law;
    Integer outcomes;  // prod_j C(N, m_j)
};

inline constexpr unsigned long kDefaultOracleBudget = 10'000'000;

/// Enumerates all prod_j C(N, m_j) subset tuples and tallies the profile.
ExhaustiveLaw enumerate_all(const ModelParams& params,
                            unsigned long outcome_budget = kDefaultOracleBudget);

/// E[prod_t (X_{=t})_{n_t}] by direct enumeration.
Rational oracle_factorial_moment(const ModelParams& params, const std::map<int, int>& counts,
                                 unsigned long outcome_budget = kDefaultOracleBudget);

/// P(I_1 = ... = I_k = 1) by direct counting of outcomes where the first k
/// individuals each lie in exactly t subsets.
Rational oracle_joint_prob(const ModelParams& params, int t, int k,
                           unsigned long outcome_budget = kDefaultOracleBudget);

}  // namespace mao
