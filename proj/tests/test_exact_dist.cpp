#include <doctest.h>

#include <cmath>
#include <vector>

#include "mao/exact_dist.hpp"
#include "mao/moments.hpp"

using namespace mao;

TEST_CASE("profile key packing round-trips") {
    std::vector<long> c = {3, 0, 7, 12};
    const uint64_t key = pack_profile(c, 12);
    CHECK(unpack_profile(key, 4, 12) == c);
    CHECK_THROWS_AS(pack_profile(std::vector<long>(9, 300), 300), BudgetExceeded);
}

TEST_CASE("profile law is a probability distribution over valid profiles") {
    ModelParams params(9, std::vector<long>{4, 2, 3});
    const ProfileDistribution law = exact_profile_distribution(params);
    Rational total = 0;
    long mass_expected = 4 + 2 + 3;
    for (const auto& [profile, prob] : law.entries()) {
        total += prob;
        CHECK(profile.population() == 9);
        CHECK(profile.membership_mass() == mass_expected);
    }
    CHECK(total == 1);
}

TEST_CASE("projected marginal agrees with the full joint law") {
    ModelParams params(8, std::vector<long>{3, 5, 2});
    const ProfileDistribution law = exact_profile_distribution(params);
    for (int t = 0; t <= 3; ++t) {
        for (auto var : {VariableSpec::exactly(t), VariableSpec::at_least(t)}) {
            const Pmf direct = marginal_pmf(law, var);
            const Pmf projected = exact_marginal_pmf(params, var);
            REQUIRE(direct.size() == projected.size());
            for (size_t k = 0; k < direct.size(); ++k) CHECK(direct.p[k] == projected.p[k]);
        }
    }
}

TEST_CASE("recursion moments equal the formula moments exactly") {
    ModelParams params(12, 4, 3);
    NormCache cache(params);
    for (int t = 0; t <= 3; ++t) {
        const Pmf pmf = exact_marginal_pmf(params, VariableSpec::exactly(t));
        const MomentReport from_pmf = pmf_moments(pmf);
        const MomentReport from_formula = formula_moment_report(cache, VariableSpec::exactly(t));
        CHECK(from_pmf.mean == from_formula.mean);
        CHECK(from_pmf.variance == from_formula.variance);
        CHECK(from_pmf.third_central == from_formula.third_central);
        CHECK(from_pmf.fourth_central == from_formula.fourth_central);
    }
}

TEST_CASE("floating-point recursion tracks the exact one") {
    ModelParams params(20, std::vector<long>{6, 11, 3, 8});
    for (auto var : {VariableSpec::exactly(2), VariableSpec::at_least(1)}) {
        const Pmf exact = exact_marginal_pmf(params, var, NumericMode::exact);
        const Pmf approx = exact_marginal_pmf(params, var, NumericMode::floating);
        CHECK(approx.mode == NumericMode::floating);
        REQUIRE(exact.size() == approx.size());
        for (size_t k = 0; k < exact.size(); ++k)
            CHECK(std::abs(to_double(exact.p[k]) - to_double(approx.p[k])) < 1e-12);
    }
}

TEST_CASE("edge categories") {
    ModelParams params(7, std::vector<long>{3, 3});
    const Pmf all = exact_marginal_pmf(params, VariableSpec::at_least(0));
    CHECK(all.p[7] == 1);  // every individual is in >= 0 subsets
    const Pmf both = exact_marginal_pmf(params, VariableSpec::exactly(2));
    Rational mean = 0;
    for (size_t k = 0; k < both.size(); ++k) mean += Rational(static_cast<long>(k)) * both.p[k];
    CHECK(mean == mean_count(params, VariableSpec::exactly(2)));
}

TEST_CASE("state budget is enforced") {
    ModelParams params(60, 20, 4);
    CHECK_THROWS_AS(exact_marginal_pmf(params, VariableSpec::exactly(2), NumericMode::exact, 50),
                    BudgetExceeded);
}

TEST_CASE("single-round law is hypergeometric-degenerate") {
    ModelParams params(10, 4, 1);
    const Pmf pmf = exact_marginal_pmf(params, VariableSpec::exactly(1));
    CHECK(pmf.p[4] == 1);  // exactly m individuals are in the one subset
}
