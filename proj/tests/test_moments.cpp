#include <doctest.h>

#include <cmath>

#include "mao/approx.hpp"
#include "mao/moments.hpp"

using namespace mao;

namespace {
double rel_err(const Rational& got, double want) {
    return std::abs(to_double(got) - want) / std::max(1.0, std::abs(want));
}
}  // namespace

TEST_CASE("means sum to the population size") {
    ModelParams params(30, 7, 4);
    Rational total = 0;
    for (int t = 0; t <= params.T(); ++t) total += mean_count(params, VariableSpec::exactly(t));
    CHECK(total == params.N);
}

TEST_CASE("mean equals N pi_t") {
    ModelParams params(30, 7, 4);
    for (int t = 0; t <= params.T(); ++t) {
        CHECK(mean_count(params, VariableSpec::exactly(t)) ==
              Rational(params.N) * marginal_pi(params, t));
    }
}

TEST_CASE("first central moment vanishes") {
    ModelParams params(40, 10, 3);
    CHECK(central_moment(params, VariableSpec::exactly(1), 1) == 0);
    CHECK(central_moment(params, VariableSpec::at_least(2), 1) == 0);
}

TEST_CASE("variance decomposes into marginal and pair terms") {
    // Var(X_t) = N pi (1 - pi) + N(N-1) gamma with gamma the indicator
    // covariance; both sides are computed by independent routes.
    ModelParams params(60, 12, 4);
    for (int t = 0; t <= 4; ++t) {
        const Rational pi = marginal_pi(params, t);
        const Rational gamma = indicator_covariance(params, t);
        const Rational lhs = central_moment(params, VariableSpec::exactly(t), 2);
        const Rational rhs =
            Rational(params.N) * pi * (1 - pi) + Rational(params.N) * (params.N - 1) * gamma;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("count covariance is symmetric and negative on the diagonal blocks") {
    ModelParams params(50, 10, 3);
    CHECK(covariance_counts(params, 1, 3) == covariance_counts(params, 3, 1));
    CHECK_THROWS(covariance_counts(params, 2, 2));
    // Counts are negatively associated across distinct categories on average:
    // summing Cov(X_t, X_s) over all pairs plus the variances gives Var(N)=0.
    Rational total = 0;
    for (int t = 0; t <= 3; ++t)
        for (int s = 0; s <= 3; ++s)
            total += t == s ? central_moment(params, VariableSpec::exactly(t), 2)
                            : covariance_counts(params, t, s);
    CHECK(total == 0);
}

TEST_CASE("reference moments, N=100 with five subsets of 20") {
    ModelParams params(100, 20, 5);
    NormCache cache(params);
    const MomentReport r2 = formula_moment_report(cache, VariableSpec::exactly(2));
    CHECK(rel_err(r2.mean, 20.48) < 1e-9);
    CHECK(rel_err(r2.variance, 11.0490232739) < 1e-9);
    CHECK(rel_err(r2.third_central, 0.3147059691) < 1e-9);
    CHECK(rel_err(r2.fourth_central, 359.8852999539) < 1e-9);

    const MomentReport a3 = formula_moment_report(cache, VariableSpec::at_least(3));
    CHECK(rel_err(a3.mean, 5.792) < 1e-9);
    CHECK(rel_err(a3.variance, 3.5905391270) < 1e-9);
    CHECK(rel_err(a3.third_central, 1.2251022398) < 1e-9);
    CHECK(rel_err(a3.fourth_central, 38.1763665922) < 1e-9);
}

TEST_CASE("at_least(0) is the constant N") {
    ModelParams params(30, 5, 4);
    const MomentReport r = formula_moment_report(params, VariableSpec::at_least(0));
    CHECK(r.mean == 30);
    CHECK(r.variance == 0);
    CHECK(r.fourth_central == 0);
}
