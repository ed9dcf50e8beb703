#pragma once

#include <map>
#include <vector>

#include "mao/model.hpp"
#include "mao/rational.hpp"

namespace mao {

/// Per-round membership multiplicities k_i for a tuple of r subsets of [T].
struct KVector {
    std::vector<int> k;  // length T, entries in {0..r}
};

/// Product over rounds of (m)_{k_i} (N-m)_{r-k_i}.  Equal sizes only.
Integer g_value(const ModelParams& params, const KVector& k, int r);

/// Sum of g over all tuples (A_1..A_r), A_j a t_j-subset of [T].
/// Brute enumeration; serves as the oracle for the column DP.
Integer transversal_sum_enum(const ModelParams& params, const CategoryList& spec);

/// Same sum via a DP over rounds with residual row quotas as state.
Integer transversal_sum(const ModelParams& params, const CategoryList& spec);

/// The norm: transversal_sum / (N)_r^(T-1).
Rational norm(const ModelParams& params, const CategoryList& spec);

/// Norm with memoisation keyed on the sorted category list.  The cache is
/// owned by the caller (norms are reused heavily by the moment expansions).
class NormCache {
  public:
    explicit NormCache(const ModelParams& params);
    const Rational& operator()(std::vector<int> categories);
    const ModelParams& params() const { return params_; }

  private:
    ModelParams params_;
    std::map<std::vector<int>, Rational> cache_;
};

}  // namespace mao
