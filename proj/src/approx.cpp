#include "mao/approx.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "mao/combinatorics.hpp"
#include "mao/moments.hpp"
#include "mao/norm.hpp"

namespace mao {

const char* to_string(ApproxRegime regime) {
    switch (regime) {
        case ApproxRegime::poisson:
            return "poisson";
        case ApproxRegime::reflected_poisson:
            return "reflected_poisson";
        case ApproxRegime::normal:
            return "normal";
    }
    return "?";
}

Rational marginal_pi(const ModelParams& params, int t) {
    if (t < 0 || t > params.T()) throw std::invalid_argument("marginal_pi: t outside {0..T}");
    // Coefficient of x^t in prod_j (1 - p_j + p_j x); collapses to the
    // binomial C(T,t) p^t (1-p)^{T-t} when all p_j coincide.
    std::vector<Rational> coeff(1, Rational(1));
    for (int j = 0; j < params.T(); ++j) {
        const Rational pj = params.p(j);
        const Rational qj = Rational(1) - pj;
        std::vector<Rational> next(coeff.size() + 1, Rational(0));
        for (size_t k = 0; k < coeff.size(); ++k) {
            next[k] += coeff[k] * qj;
            next[k + 1] += coeff[k] * pj;
        }
        coeff = std::move(next);
    }
    return coeff[static_cast<size_t>(t)];
}

std::pair<Rational, Rational> normal_approximant(const ModelParams& params,
                                                 const VariableSpec& var) {
    if (!params.equal_sizes())
        throw std::invalid_argument(
            "normal_approximant: formula variance needs equal sizes; supply moments from the "
            "exact recursion or simulation instead");
    NormCache norms(params);
    MomentReport report = formula_moment_report(norms, var);
    return {report.mean, report.variance};
}

Pmf poisson_pmf(double lambda, long support_max) {
    Pmf pmf;
    pmf.mode = NumericMode::floating;
    pmf.p.assign(static_cast<size_t>(support_max) + 1, Rational(0));
    if (lambda <= 0) {
        pmf.p[0] = 1;
        return pmf;
    }
    double mass = std::exp(-lambda);
    double total = 0;
    for (long k = 0; k < support_max; ++k) {
        pmf.p[static_cast<size_t>(k)] = rational_from_double(mass);
        total += mass;
        mass *= lambda / static_cast<double>(k + 1);
    }
    // Tail beyond the support folds into the top point so TV against an
    // N-supported law is well defined.
    pmf.p[static_cast<size_t>(support_max)] = rational_from_double(std::max(0.0, 1.0 - total));
    return pmf;
}

Pmf poisson_approximant(const ModelParams& params, const VariableSpec& var) {
    Rational lambda = 0;
    const int lo = var.kind == VariableSpec::Kind::exactly ? var.t : var.t;
    const int hi = var.kind == VariableSpec::Kind::exactly ? var.t : params.T();
    for (int s = lo; s <= hi; ++s) lambda += Rational(params.N) * marginal_pi(params, s);
    return poisson_pmf(to_double(lambda), params.N);
}

namespace {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace

Pmf normal_pmf(double mean, double variance, long support_max) {
    Pmf pmf;
    pmf.mode = NumericMode::floating;
    pmf.p.assign(static_cast<size_t>(support_max) + 1, Rational(0));
    if (variance <= 0) {
        long at = std::clamp<long>(std::lround(mean), 0, support_max);
        pmf.p[static_cast<size_t>(at)] = 1;
        return pmf;
    }
    const double sigma = std::sqrt(variance);
    double lower = 0.0;  // CDF at the left edge, tail folded into cell 0
    for (long k = 0; k <= support_max; ++k) {
        const double upper = k == support_max
                                 ? 1.0
                                 : normal_cdf((static_cast<double>(k) + 0.5 - mean) / sigma);
        pmf.p[static_cast<size_t>(k)] = rational_from_double(std::max(0.0, upper - lower));
        lower = upper;
    }
    return pmf;
}

ApproxRegime select_regime(const ModelParams& params, int t, double threshold) {
    if (threshold <= 0) throw std::invalid_argument("select_regime: threshold must be positive");
    const double mu = to_double(Rational(params.N) * marginal_pi(params, t));
    if (mu < threshold) return ApproxRegime::poisson;
    if (static_cast<double>(params.N) - mu < threshold) return ApproxRegime::reflected_poisson;
    return ApproxRegime::normal;
}

ApproxDiagnostics chen_stein_bound(const ModelParams& params, int t, double threshold,
                                   const Pmf* exact) {
    NormCache norms(params);
    ApproxDiagnostics diag;
    const Rational pi = norms({t}) / params.N;
    diag.lambda = Rational(params.N) * pi;
    diag.variance = central_moment(norms, VariableSpec::exactly(t), 2);
    diag.delta = diag.lambda - diag.variance;
    diag.pair_prob = norms({t, t}) / Rational(Integer(params.N) * Integer(params.N - 1));
    Rational dev = diag.pair_prob - pi * pi;
    if (dev < 0) dev = -dev;
    diag.big_delta = Rational(Integer(params.N) * Integer(params.N - 1)) * dev;
    diag.chen_stein_bound = Rational(params.N) * pi * pi + diag.big_delta;
    diag.regime_threshold = threshold;
    diag.regime = select_regime(params, t, threshold);
    if (exact != nullptr) {
        diag.tv_poisson = distance(*exact, poisson_pmf(to_double(diag.lambda), params.N),
                                   DistanceMetric::tv);
        diag.ks_normal = distance(
            *exact, normal_pmf(to_double(diag.lambda), to_double(diag.variance), params.N),
            DistanceMetric::ks);
    }
    return diag;
}

Rational covariance_expansion(const ModelParams& params, int t) {
    const Rational p = params.p();
    const Rational pi = marginal_pi(params, t);
    const Rational Tp = Rational(params.T()) * p;
    Rational bracket = Rational(2 * t) - Tp;
    if (t != 0) bracket -= Rational(static_cast<long>(t) * t) / Tp;
    return pi * pi * bracket / (Rational(params.N) * (Rational(1) - p));
}

Rational joint_prob_k(const ModelParams& params, int t, int k) {
    if (k < 1 || k > 4) throw std::invalid_argument("joint_prob_k: k must be in 1..4");
    NormCache norms(params);
    std::vector<int> list(static_cast<size_t>(k), t);
    return norms(list) / Rational(falling_factorial(params.N, static_cast<unsigned>(k)));
}

}  // namespace mao
