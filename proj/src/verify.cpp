#include "mao/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mao/approx.hpp"
#include "mao/exact_dist.hpp"
#include "mao/moments.hpp"
#include "mao/montecarlo.hpp"
#include "mao/norm.hpp"
#include "mao/oracle.hpp"
#include "mao/pmf.hpp"

namespace mao {

namespace {

using Clock = std::chrono::steady_clock;

struct ReferenceRow {
    VariableSpec var;
    double mean, variance, third, fourth;
};

// Frozen reference moments for the equal-size case N=100, m=20, T=5.
const std::vector<ReferenceRow> kEqualCaseMoments = {
    {VariableSpec::exactly(2), 20.48, 11.0490232739, 0.3147059691, 359.8852999539},
    {VariableSpec::exactly(3), 5.12, 3.5574640576, 1.5505305795, 37.5680356004},
    {VariableSpec::exactly(4), 0.64, 0.5914622301, 0.5038057446, 1.4031697343},
    {VariableSpec::exactly(5), 0.032, 0.0318008542, 0.0314058107, 0.0336592618},
    {VariableSpec::at_least(2), 26.272, 5.9519005116, -0.023257248, 105.5496648445},
    {VariableSpec::at_least(3), 5.792, 3.5905391270, 1.2251022398, 38.1763665922},
    {VariableSpec::at_least(4), 0.672, 0.6170337887, 0.5186740410, 1.4947735616},
    {VariableSpec::at_least(5), 0.032, 0.0318008542, 0.0314058107, 0.0336592618},
};

// Frozen mean/variance for the large case N=5000, m=1000, T=5.
const std::vector<std::pair<int, std::pair<double, double>>> kLargeCaseMoments = {
    {2, {1024.0, 552.1473467}},
    {3, {256.0, 177.3670417}},
    {4, {32.0, 29.4928384}},
    {5, {1.6, 1.58926437}},
};

// Frozen reference moments for the unequal-size case N=100, m=[5,20,40,70,30].
const std::vector<ReferenceRow> kUnequalCaseMoments = {
    {VariableSpec::exactly(2), 37.27, 20.981651, 2.592532, 1309.69213},
    {VariableSpec::exactly(3), 15.05, 7.908256, 0.864444, 184.961192},
    {VariableSpec::exactly(4), 2.29, 1.85535, 1.191134, 10.644157},
    {VariableSpec::exactly(5), 0.084, 0.08213, 0.078489, 0.091729},
    {VariableSpec::at_least(2), 54.694, 7.159947, -0.159348, 152.966245},
    {VariableSpec::at_least(3), 17.424, 6.314953, 0.439022, 118.788672},
    {VariableSpec::at_least(4), 2.374, 1.888293, 1.168025, 10.960405},
    {VariableSpec::at_least(5), 0.084, 0.08213, 0.078489, 0.091729},
};

const ModelParams kEqualCaseParams{100, 20, 5};
const ModelParams kUnequalCaseParams{100, {5, 20, 40, 70, 30}};

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

std::string spec_name(const VariableSpec& var) {
    std::ostringstream out;
    out << (var.kind == VariableSpec::Kind::exactly ? "X=" : "X>=") << var.t;
    return out.str();
}

double report_rel_err(const MomentReport& got, const ReferenceRow& want) {
    double worst = rel_err(to_double(got.mean), want.mean);
    worst = std::max(worst, rel_err(to_double(got.variance), want.variance));
    worst = std::max(worst, rel_err(to_double(got.third_central), want.third));
    worst = std::max(worst, rel_err(to_double(got.fourth_central), want.fourth));
    return worst;
}

struct GridPoint {
    long N;
    int T;
    long m;
};

std::vector<GridPoint> moment_grid() {
    std::vector<GridPoint> grid;
    for (long N : {20L, 50L, 100L})
        for (double p : {0.1, 0.2, 0.5})
            for (int T = 2; T <= 5; ++T) grid.push_back({N, T, std::lround(p * N)});
    return grid;
}

CriterionResult timed(int id, std::string name, const std::function<void(CriterionResult&)>& body) {
    CriterionResult result;
    result.id = id;
    result.name = std::move(name);
    result.pass = true;
    const auto start = Clock::now();
    try {
        body(result);
    } catch (const std::exception& err) {
        result.pass = false;
        result.details = std::string("exception: ") + err.what();
    }
    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

void criterion_equal_case_formula(CriterionResult& out) {
    NormCache norms(kEqualCaseParams);
    double worst = 0;
    std::string worst_at;
    for (const auto& row : kEqualCaseMoments) {
        const MomentReport report = formula_moment_report(norms, row.var);
        const double err = report_rel_err(report, row);
        if (err > worst) {
            worst = err;
            worst_at = spec_name(row.var);
        }
    }
    out.pass = worst <= 1e-7;
    std::ostringstream detail;
    detail << "max rel err " << worst << " at " << worst_at << " (tol 1e-7)";
    out.details = detail.str();
}

void criterion_equal_case_exact_dp(CriterionResult& out) {
    NormCache norms(kEqualCaseParams);
    ProfileDistribution prefix =
        prefix_profile_distribution(kEqualCaseParams, NumericMode::exact);
    bool all_equal = true;
    std::string mismatch;
    for (const auto& row : kEqualCaseMoments) {
        const MomentReport formula = formula_moment_report(norms, row.var);
        const Pmf pmf = project_last_round(prefix, kEqualCaseParams.m.back(), row.var);
        const MomentReport dp = pmf_moments(pmf);
        const bool equal = dp.mean == formula.mean && dp.variance == formula.variance &&
                           dp.third_central == formula.third_central &&
                           dp.fourth_central == formula.fourth_central;
        if (!equal) {
            all_equal = false;
            mismatch = spec_name(row.var);
        }
    }
    out.pass = all_equal;
    out.details = all_equal ? "formula and recursion moments identical as rationals"
                            : "rational mismatch at " + mismatch;
}

void criterion_large_case_formula(CriterionResult& out) {
    const ModelParams params{5000, 1000, 5};
    NormCache norms(params);
    double worst = 0;
    for (const auto& [t, want] : kLargeCaseMoments) {
        const Rational mean = norms({t});
        const Rational variance = central_moment(norms, VariableSpec::exactly(t), 2);
        worst = std::max(worst, rel_err(to_double(mean), want.first));
        worst = std::max(worst, rel_err(to_double(variance), want.second));
    }
    out.pass = worst <= 1e-6;
    std::ostringstream detail;
    detail << "max rel err " << worst << " (tol 1e-6)";
    out.details = detail.str();
}

void criterion_unequal_case_exact_dp(CriterionResult& out) {
    ProfileDistribution prefix =
        prefix_profile_distribution(kUnequalCaseParams, NumericMode::exact);
    const long m_last = *std::min_element(kUnequalCaseParams.m.begin(), kUnequalCaseParams.m.end());
    double worst = 0;
    std::string worst_at;
    for (const auto& row : kUnequalCaseMoments) {
        const Pmf pmf = project_last_round(prefix, m_last, row.var);
        const MomentReport report = pmf_moments(pmf);
        const double err = report_rel_err(report, row);
        if (err > worst) {
            worst = err;
            worst_at = spec_name(row.var);
        }
    }
    out.pass = worst <= 1e-4;
    std::ostringstream detail;
    detail << "max rel err " << worst << " at " << worst_at << " (tol 1e-4)";
    out.details = detail.str();
}

void criterion_monte_carlo(CriterionResult& out) {
    constexpr long kReplicates = 100'000;
    constexpr uint64_t kSeed = 20250823;
    std::vector<VariableSpec> specs;
    for (const auto& row : kEqualCaseMoments) specs.push_back(row.var);

    NormCache norms(kEqualCaseParams);
    const SimulationResult sim = simulate(kEqualCaseParams, specs, kReplicates, kSeed, 1);
    double worst_sigmas = 0;
    for (size_t s = 0; s < specs.size(); ++s) {
        const MomentReport exact = formula_moment_report(norms, specs[s]);
        const double se = std::sqrt(to_double(exact.variance) / kReplicates);
        const double gap = std::abs(to_double(sim.moments[s].mean) - to_double(exact.mean));
        worst_sigmas = std::max(worst_sigmas, gap / se);
    }
    const SimulationResult sim4 = simulate(kEqualCaseParams, specs, kReplicates, kSeed, 4);
    const bool deterministic = sim.histograms == sim4.histograms;
    out.pass = worst_sigmas <= 5.0 && deterministic;
    std::ostringstream detail;
    detail << "worst |mean gap| = " << worst_sigmas << " standard errors (limit 5); 1 vs 4 threads "
           << (deterministic ? "identical" : "DIFFER");
    out.details = detail.str();
}

void criterion_oracle(CriterionResult& out) {
    int instances = 0;
    for (long N = 2; N <= 5; ++N) {
        for (int T = 1; T <= 3; ++T) {
            std::vector<long> m(static_cast<size_t>(T), 1);
            while (true) {
                const ModelParams params{N, m};
                const ExhaustiveLaw truth = enumerate_all(params);
                const ProfileDistribution dp = exact_profile_distribution(params);
                ++instances;

                // Joint law equality, profile by profile.
                for (const auto& [profile, prob] : truth.law.entries())
                    if (dp.probability(profile) != prob)
                        throw std::runtime_error("profile law mismatch at N=" + std::to_string(N));
                if (truth.law.state_count() != dp.state_count())
                    throw std::runtime_error("state count mismatch");

                if (params.equal_sizes()) {
                    // Factorial moments (all multisets of categories up to size 3)
                    // and joint indicator probabilities against the norm.
                    for (int t = 0; t <= T; ++t) {
                        for (int s = t; s <= T; ++s) {
                            std::map<int, int> counts;
                            ++counts[t];
                            ++counts[s];
                            if (oracle_factorial_moment(params, counts) !=
                                factorial_moment(params, counts))
                                throw std::runtime_error("factorial moment mismatch (pair)");
                            for (int u = s; N >= 3 && u <= T; ++u) {
                                std::map<int, int> triple = counts;
                                ++triple[u];
                                if (oracle_factorial_moment(params, triple) !=
                                    factorial_moment(params, triple))
                                    throw std::runtime_error("factorial moment mismatch (triple)");
                            }
                        }
                        for (int k = 1; k <= std::min<long>(4, N); ++k)
                            if (oracle_joint_prob(params, t, k) != joint_prob_k(params, t, k))
                                throw std::runtime_error("joint indicator probability mismatch");
                    }
                }

                // Next m vector (odometer over {1..N-1}^T).
                size_t j = 0;
                while (j < m.size() && m[j] == N - 1) m[j++] = 1;
                if (j == m.size()) break;
                ++m[j];
            }
        }
    }
    std::ostringstream detail;
    detail << instances << " instances: recursion law, factorial moments and joint indicator "
           << "probabilities all match exhaustive enumeration exactly";
    out.details = detail.str();
}

void criterion_underdispersion(CriterionResult& out) {
    int points = 0;
    for (const auto& gp : moment_grid()) {
        const ModelParams params{gp.N, gp.m, gp.T};
        NormCache norms(params);
        for (int t = 0; t <= gp.T; ++t) {
            const Rational mean = norms({t});
            const Rational variance = central_moment(norms, VariableSpec::exactly(t), 2);
            if (!(variance < mean))
                throw std::runtime_error("underdispersion violated at N=" + std::to_string(gp.N) +
                                         " T=" + std::to_string(gp.T) + " t=" + std::to_string(t));
            if (!(norms({t}) * norms({t}) >= norms({t, t})))
                throw std::runtime_error("norm inequality violated at N=" + std::to_string(gp.N));
            ++points;
        }
    }
    out.details = "Var < N pi and ||t||^2 >= ||t,t|| at all " + std::to_string(points) +
                  " grid points";
}

void criterion_chen_stein(CriterionResult& out) {
    double worst_margin = 1e300;
    for (const auto& gp : moment_grid()) {
        const ModelParams params{gp.N, gp.m, gp.T};
        const ProfileDistribution prefix =
            prefix_profile_distribution(params, NumericMode::floating);
        for (int t = 0; t <= gp.T; ++t) {
            const Pmf pmf = project_last_round(prefix, gp.m, VariableSpec::exactly(t));
            const ApproxDiagnostics diag = chen_stein_bound(params, t, kDefaultRegimeThreshold, &pmf);
            const double margin = to_double(diag.chen_stein_bound) - *diag.tv_poisson;
            worst_margin = std::min(worst_margin, margin);
            if (margin < -1e-12)
                throw std::runtime_error("Chen-Stein bound violated at N=" + std::to_string(gp.N) +
                                         " m=" + std::to_string(gp.m) +
                                         " T=" + std::to_string(gp.T) + " t=" + std::to_string(t));
        }
    }
    // Spot value at the sparse cell of the equal-size reference case.
    const Pmf pmf = exact_marginal_pmf(kEqualCaseParams, VariableSpec::exactly(5));
    const ApproxDiagnostics diag = chen_stein_bound(kEqualCaseParams, 5, kDefaultRegimeThreshold, &pmf);
    const double bound = to_double(diag.chen_stein_bound);
    const bool spot = std::abs(bound - 1.9915e-4) <= 1e-7 && *diag.tv_poisson <= bound;
    if (!spot) throw std::runtime_error("N=100, m=20, t=5 spot bound check failed");
    std::ostringstream detail;
    detail << "TV <= bound everywhere (min margin " << worst_margin << "); N=100 m=20 t=5 bound = " << bound
           << ", TV = " << *diag.tv_poisson;
    out.details = detail.str();
}

void criterion_covariance_expansion(CriterionResult& out) {
    const std::vector<long> Ns = {50, 100, 200, 400};
    std::map<long, double> scaled;
    double gamma100 = 0;
    for (long N : Ns) {
        const ModelParams params{N, N / 5, 5};
        const double gamma = to_double(indicator_covariance(params, 2));
        const double leading = to_double(covariance_expansion(params, 2));
        scaled[N] = std::abs(gamma - leading) * static_cast<double>(N) * static_cast<double>(N);
        if (N == 100) gamma100 = gamma;
    }
    const bool spot = std::abs(gamma100 - (-5.28957e-4)) <= 1e-8;
    const double ref = scaled[100];
    bool within = true;
    for (const auto& [N, value] : scaled)
        if (value > 2.0 * ref || value < ref / 2.0) within = false;
    out.pass = spot && within;
    std::ostringstream detail;
    detail << "gamma(100) = " << gamma100 << "; |residual| N^2 over N grid in ["
           << std::min_element(scaled.begin(), scaled.end(),
                               [](auto& a, auto& b) { return a.second < b.second; })
                  ->second
           << ", "
           << std::max_element(scaled.begin(), scaled.end(),
                               [](auto& a, auto& b) { return a.second < b.second; })
                  ->second
           << "] vs reference " << ref;
    out.details = detail.str();
}

void criterion_clt_trend(CriterionResult& out) {
    const std::vector<long> Ns = {50, 100, 200, 400};
    std::vector<double> ks;
    for (long N : Ns) {
        const ModelParams params{N, N / 5, 5};
        const Pmf pmf = exact_marginal_pmf(params, VariableSpec::exactly(2), NumericMode::floating);
        const MomentReport moments = pmf_moments(pmf);
        const double mu = to_double(moments.mean);
        const double sigma = std::sqrt(to_double(moments.variance));
        double cdf = 0, worst = 0;
        for (size_t k = 0; k < pmf.p.size(); ++k) {
            cdf += to_double(pmf.p[k]);
            const double z = (static_cast<double>(k) + 0.5 - mu) / sigma;
            worst = std::max(worst, std::abs(cdf - 0.5 * std::erfc(-z / std::sqrt(2.0))));
        }
        ks.push_back(worst);
    }
    bool decreasing = true;
    for (size_t i = 1; i < ks.size(); ++i)
        if (!(ks[i] < ks[i - 1])) decreasing = false;
    out.pass = decreasing;
    std::ostringstream detail;
    detail << "KS to normal along N = {50,100,200,400}: ";
    for (double d : ks) detail << d << " ";
    out.details = detail.str();
}

void criterion_pk_decay(CriterionResult& out) {
    std::map<long, double> scaled;
    for (long N : {100L, 200L, 400L}) {
        const ModelParams params{N, N / 5, 5};
        const double pi = to_double(marginal_pi(params, 2));
        double worst = 0;
        for (int k = 1; k <= 4; ++k) {
            const double pk = to_double(joint_prob_k(params, 2, k));
            worst = std::max(worst, std::abs(pk - std::pow(pi, k)));
        }
        scaled[N] = static_cast<double>(N) * worst;
    }
    double lo = 1e300, hi = 0;
    for (const auto& [N, value] : scaled) {
        lo = std::min(lo, value);
        hi = std::max(hi, value);
    }
    out.pass = hi < 2.0 * lo;
    std::ostringstream detail;
    detail << "N max_k |P_k - pi^k| in [" << lo << ", " << hi << "], ratio " << hi / lo
           << " (limit 2)";
    out.details = detail.str();
}

}  // namespace

bool VerifyReport::all_pass() const {
    return std::all_of(criteria.begin(), criteria.end(),
                       [](const CriterionResult& c) { return c.pass; });
}

VerifyReport run_verification() {
    VerifyReport report;
    report.criteria.push_back(timed(1, "Reference moments (N=100, m=20x5), formula", criterion_equal_case_formula));
    report.criteria.push_back(timed(2, "Exact recursion == formula (N=100, m=20x5)", criterion_equal_case_exact_dp));
    report.criteria.push_back(timed(3, "Reference moments (N=5000, m=1000x5)", criterion_large_case_formula));
    report.criteria.push_back(timed(4, "Unequal sizes (N=100) via recursion", criterion_unequal_case_exact_dp));
    report.criteria.push_back(timed(5, "Monte Carlo agreement + determinism", criterion_monte_carlo));
    report.criteria.push_back(timed(6, "Exhaustive oracle equivalence", criterion_oracle));
    report.criteria.push_back(timed(7, "Underdispersion + norm inequality", criterion_underdispersion));
    report.criteria.push_back(timed(8, "Chen-Stein bound never violated", criterion_chen_stein));
    report.criteria.push_back(timed(9, "Covariance expansion residual O(1/N^2)", criterion_covariance_expansion));
    report.criteria.push_back(timed(10, "KS-to-normal trend decreasing", criterion_clt_trend));
    report.criteria.push_back(timed(11, "Joint indicator decay N |P_k - pi^k|", criterion_pk_decay));

    // Each criterion carries a runtime ceiling.
    for (auto& criterion : report.criteria) {
        double limit = 0;
        switch (criterion.id) {
            case 1: limit = 30; break;
            case 2: limit = 300; break;
            case 3: limit = 30; break;
            case 4: limit = 600; break;
            default: continue;
        }
        if (criterion.seconds > limit) {
            criterion.pass = false;
            criterion.details += " [runtime limit exceeded]";
        }
    }
    return report;
}

}  // namespace mao
