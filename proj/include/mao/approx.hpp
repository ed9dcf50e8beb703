#pragma once

#include <optional>

#include "mao/model.hpp"
#include "mao/pmf.hpp"

namespace mao {

enum class ApproxRegime { poisson, reflected_poisson, normal };

const char* to_string(ApproxRegime regime);

/// pi_t: binomial for equal sizes, Poisson-binomial (coefficient of x^t in
/// prod_j (1 - p_j + p_j x)) otherwise.
Rational marginal_pi(const ModelParams& params, int t);

/// Poisson-regime diagnostics for X_{=t} (equal sizes).
struct ApproxDiagnostics {
    Rational lambda;            // N pi_t
    Rational variance;          // Var(X_{=t})
    Rational delta;             // lambda - Var (positive under the MAO inequality)
    Rational pair_prob;         // P_t = P(I_1 = I_2 = 1)
    Rational big_delta;         // N(N-1) |P_t - pi_t^2|
    Rational chen_stein_bound;  // N pi_t^2 + big_delta
    ApproxRegime regime = ApproxRegime::normal;
    double regime_threshold = 10.0;
    std::optional<double> tv_poisson;  // filled when an exact pmf is supplied
    std::optional<double> ks_normal;
};

/// Mean/variance of the matching normal law (from the norm-based moments,
/// not the naive binomial variance).
std::pair<Rational, Rational> normal_approximant(const ModelParams& params,
                                                 const VariableSpec& var);

/// Poisson(lambda) with lambda = E[X], truncated at N with the tail mass
/// folded into the point N.
Pmf poisson_approximant(const ModelParams& params, const VariableSpec& var);
Pmf poisson_pmf(double lambda, long support_max);

/// Normal density discretised at half-integer cell boundaries, tails folded
/// into the end points.
Pmf normal_pmf(double mean, double variance, long support_max);

inline constexpr double kDefaultRegimeThreshold = 10.0;

/// mean < threshold -> poisson; N - mean < threshold -> reflected_poisson;
/// otherwise normal.
ApproxRegime select_regime(const ModelParams& params, int t,
                           double threshold = kDefaultRegimeThreshold);

/// Chen-Stein quantities; when an exact pmf is given, also the TV distance
/// to Poisson(lambda) and the KS distance to the discretised normal.
ApproxDiagnostics chen_stein_bound(const ModelParams& params, int t,
                                   double threshold = kDefaultRegimeThreshold,
                                   const Pmf* exact = nullptr);

/// Leading 1/N term of Cov(I_i, I_j): pi_t^2 (2t - Tp - t^2/(Tp)) / (N(1-p)),
/// with the t^2/(Tp) term read as 0 at t = 0.
Rational covariance_expansion(const ModelParams& params, int t);

/// P(I_1 = ... = I_k = 1) = ||(t,..,t)||_T / (N)_k, k <= 4.
Rational joint_prob_k(const ModelParams& params, int t, int k);

}  // namespace mao
