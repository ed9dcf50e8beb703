#include <doctest.h>

#include "mao/approx.hpp"
#include "mao/moments.hpp"
#include "mao/oracle.hpp"

using namespace mao;

TEST_CASE("exhaustive law equals the recursion law") {
    for (const ModelParams& params : {ModelParams(4, 2, 2), ModelParams(5, 2, 3),
                                      ModelParams(5, std::vector<long>{1, 3, 2})}) {
        const ExhaustiveLaw oracle = enumerate_all(params);
        const ProfileDistribution dp = exact_profile_distribution(params);
        for (const auto& [profile, prob] : dp.entries())
            CHECK(prob == oracle.law.probability(profile));
        for (const auto& [profile, prob] : oracle.law.entries())
            CHECK(prob == dp.probability(profile));
    }
}

TEST_CASE("outcome count is the product of binomials") {
    const ExhaustiveLaw oracle = enumerate_all(ModelParams(4, 2, 2));
    CHECK(oracle.outcomes == 36);
}

TEST_CASE("factorial moments against enumeration") {
    ModelParams params(5, 2, 3);
    for (int t = 0; t <= 3; ++t) {
        CHECK(factorial_moment(params, {{t, 1}}) == oracle_factorial_moment(params, {{t, 1}}));
        CHECK(factorial_moment(params, {{t, 2}}) == oracle_factorial_moment(params, {{t, 2}}));
    }
    CHECK(factorial_moment(params, {{0, 1}, {1, 1}}) ==
          oracle_factorial_moment(params, {{0, 1}, {1, 1}}));
    CHECK(factorial_moment(params, {{1, 2}, {2, 1}}) ==
          oracle_factorial_moment(params, {{1, 2}, {2, 1}}));
}

TEST_CASE("joint membership probabilities against enumeration") {
    ModelParams params(4, 2, 2);
    for (int t = 0; t <= 2; ++t) {
        for (int k = 1; k <= 3; ++k)
            CHECK(joint_prob_k(params, t, k) == oracle_joint_prob(params, t, k));
    }
}

TEST_CASE("enumeration budget is enforced") {
    CHECK_THROWS_AS(enumerate_all(ModelParams(30, 15, 3), 1000), BudgetExceeded);
}
