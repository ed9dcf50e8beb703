#include <doctest.h>

#include <cmath>

#include "mao/approx.hpp"
#include "mao/combinatorics.hpp"
#include "mao/exact_dist.hpp"
#include "mao/moments.hpp"

using namespace mao;

TEST_CASE("marginal membership law") {
    ModelParams equal(100, 20, 5);
    for (int t = 0; t <= 5; ++t) {
        // binomial marginal: C(5,t) .2^t .8^(5-t)
        Rational direct = Rational(binomial(5, t));
        for (int i = 0; i < t; ++i) direct *= Rational(1, 5);
        for (int i = t; i < 5; ++i) direct *= Rational(4, 5);
        CHECK(marginal_pi(equal, t) == direct);
    }

    ModelParams uneven(25, std::vector<long>{3, 10, 8});
    Rational total = 0;
    for (int t = 0; t <= 3; ++t) total += marginal_pi(uneven, t);
    CHECK(total == 1);
    // t = 0 factors: prod (1 - p_j).
    CHECK(marginal_pi(uneven, 0) ==
          Rational(22, 25) * Rational(15, 25) * Rational(17, 25));
}

TEST_CASE("approximant pmfs normalise") {
    const Pmf pois = poisson_pmf(3.7, 40);
    CHECK(std::abs(to_double(pois.sum()) - 1.0) < 1e-12);
    const Pmf norm_law = normal_pmf(20.0, 9.0, 100);
    CHECK(std::abs(to_double(norm_law.sum()) - 1.0) < 1e-12);
    const Pmf degenerate = normal_pmf(5.0, 0.0, 10);
    CHECK(degenerate.p[5] == 1);
}

TEST_CASE("normal pmf concentrates near the mean") {
    const Pmf law = normal_pmf(50.0, 25.0, 100);
    double near = 0;
    for (long k = 35; k <= 65; ++k) near += to_double(law.p[static_cast<size_t>(k)]);
    CHECK(near > 0.99);
}

TEST_CASE("regime selection by expected count") {
    ModelParams params(100, 20, 5);
    CHECK(select_regime(params, 5) == ApproxRegime::poisson);       // mean 0.032
    CHECK(select_regime(params, 1) == ApproxRegime::normal);        // mean 40.96
    ModelParams lopsided(100, 99, 5);
    CHECK(select_regime(lopsided, 5) == ApproxRegime::reflected_poisson);
}

TEST_CASE("Chen-Stein quantities are internally consistent") {
    ModelParams params(100, 20, 5);
    for (int t : {0, 2, 5}) {
        const ApproxDiagnostics diag = chen_stein_bound(params, t);
        const Rational pi = marginal_pi(params, t);
        CHECK(diag.lambda == Rational(100) * pi);
        CHECK(diag.variance == central_moment(params, VariableSpec::exactly(t), 2));
        CHECK(diag.delta == diag.lambda - diag.variance);
        CHECK(diag.big_delta == abs(Rational(100 * 99) * (diag.pair_prob - pi * pi)));
        CHECK(diag.chen_stein_bound == Rational(100) * pi * pi + diag.big_delta);
        CHECK(diag.delta > 0);  // variance sits strictly below the Poisson value
    }
}

TEST_CASE("Chen-Stein bound spot value") {
    ModelParams params(100, 20, 5);
    const ApproxDiagnostics diag = chen_stein_bound(params, 5);
    CHECK(std::abs(to_double(diag.chen_stein_bound) - 1.9915e-4) < 1e-7);
}

TEST_CASE("total variation to Poisson obeys the bound") {
    ModelParams params(50, 10, 5);
    const Pmf exact = exact_marginal_pmf(params, VariableSpec::exactly(5));
    const ApproxDiagnostics diag = chen_stein_bound(params, 5, kDefaultRegimeThreshold, &exact);
    REQUIRE(diag.tv_poisson.has_value());
    CHECK(*diag.tv_poisson <= to_double(diag.chen_stein_bound) + 1e-12);
}

TEST_CASE("pair covariance matches its leading 1/N expansion") {
    ModelParams params(100, 20, 5);
    const double gamma = to_double(indicator_covariance(params, 2));
    CHECK(std::abs(gamma - (-5.28957e-4)) < 1e-8);
    const double leading = to_double(covariance_expansion(params, 2));
    CHECK(std::abs(leading - (-5.24288e-4)) < 1e-9);
    // The residual shrinks like 1/N^2: quadruple N, quarter the residual.
    const double res100 = gamma - leading;
    ModelParams big(400, 80, 5);
    const double res400 =
        to_double(indicator_covariance(big, 2)) - to_double(covariance_expansion(big, 2));
    CHECK(std::abs(res400) < std::abs(res100) / 8);
}

TEST_CASE("joint membership probabilities against the norm") {
    ModelParams params(20, 4, 3);
    for (int k = 1; k <= 4; ++k) {
        const Rational direct = joint_prob_k(params, 1, k);
        CHECK(direct > 0);
        CHECK(direct < 1);
        if (k == 1) CHECK(direct == marginal_pi(params, 1));
    }
    CHECK_THROWS(joint_prob_k(params, 1, 5));
}

TEST_CASE("normal approximant uses the exact variance") {
    ModelParams params(100, 20, 5);
    const auto [mu, var] = normal_approximant(params, VariableSpec::exactly(2));
    CHECK(mu == mean_count(params, VariableSpec::exactly(2)));
    CHECK(var == central_moment(params, VariableSpec::exactly(2), 2));
}
