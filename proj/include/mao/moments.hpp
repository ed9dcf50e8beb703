#pragma once

#include <cstdint>
#include <map>

#include "mao/model.hpp"
#include "mao/norm.hpp"
#include "mao/pmf.hpp"

namespace mao {

/// E[prod_t (X_{=t})_{n_t}]: the norm of the list with category t repeated
/// counts[t] times.
Rational factorial_moment(const ModelParams& params, const std::map<int, int>& counts);
Rational factorial_moment(NormCache& norms, const std::map<int, int>& counts);

/// E[X_{=t}] (= N pi_t for equal sizes).
Rational mean_count(const ModelParams& params, const VariableSpec& var);

/// Central moment of order 1..4 via the norm machinery (equal sizes).
/// Order 1 returns 0; use mean_count for the location.
Rational central_moment(const ModelParams& params, const VariableSpec& var, int order);
Rational central_moment(NormCache& norms, const VariableSpec& var, int order);

/// Cov(X_{=t}, X_{=s}) = ||t,s|| - ||t|| ||s||, t != s.
Rational covariance_counts(const ModelParams& params, int t, int s);

/// gamma_N = Cov(I_i, I_j) = ||t,t|| / (N(N-1)) - pi_t^2 for two distinct
/// individuals' indicators of being in exactly t subsets.
Rational indicator_covariance(const ModelParams& params, int t);

/// Mean + central moments 2..4 from the formula path.
MomentReport formula_moment_report(const ModelParams& params, const VariableSpec& var);
MomentReport formula_moment_report(NormCache& norms, const VariableSpec& var);

}  // namespace mao
