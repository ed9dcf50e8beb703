#include <doctest.h>

#include <cmath>
#include <vector>

#include "mao/norm.hpp"

using namespace mao;

TEST_CASE("single-category norm is N times the binomial marginal") {
    // N = 100, five subsets of size 20: ||(2)|| = 100 C(5,2) .2^2 .8^3 = 20.48.
    ModelParams params(100, 20, 5);
    CHECK(norm(params, {{2}}) == Rational(512, 25));
    CHECK(norm(params, {{0}}) == Rational(100) * Rational(4 * 4 * 4 * 4 * 4, 5 * 5 * 5 * 5 * 5));
}

TEST_CASE("one-round norms") {
    ModelParams params(10, 3, 1);
    CHECK(norm(params, {{1}}) == 3);
    CHECK(norm(params, {{0}}) == 7);
    // r = 2, one round: G = (m)_1 (N-m)_1 and the denominator power is 0.
    CHECK(norm(params, {{0, 1}}) == 3 * 7);
    CHECK(norm(params, {{1, 1}}) == 3 * 2);
}

TEST_CASE("quota recursion matches brute enumeration") {
    for (long N : {5L, 6L}) {
        for (long m : {1L, 2L, 3L}) {
            for (int T : {1, 2, 3}) {
                ModelParams params(N, m, T);
                std::vector<std::vector<int>> lists = {{0},    {1},    {0, 0},   {0, 1},
                                                       {1, 1}, {1, T}, {0, 1, 1}};
                for (const auto& cats : lists) {
                    if (static_cast<long>(cats.size()) > N) continue;
                    bool in_range = true;
                    for (int t : cats) in_range = in_range && t <= T;
                    if (!in_range) continue;
                    CategoryList spec{cats};
                    CHECK(transversal_sum(params, spec) == transversal_sum_enum(params, spec));
                }
            }
        }
    }
}

TEST_CASE("norm is symmetric in the category list") {
    ModelParams params(30, 6, 4);
    CHECK(norm(params, {{1, 3}}) == norm(params, {{3, 1}}));
    CHECK(norm(params, {{0, 2, 4}}) == norm(params, {{4, 0, 2}}));
}

TEST_CASE("pair norm spot value") {
    ModelParams params(100, 20, 5);
    const double value = to_double(norm(params, {{2, 2}}));
    CHECK(std::abs(value - 409.99942327) < 5e-7);
}

TEST_CASE("norm cache returns the same values") {
    ModelParams params(40, 8, 3);
    NormCache cache(params);
    CHECK(cache({2, 1}) == norm(params, {{1, 2}}));
    CHECK(cache({1, 2}) == cache({2, 1}));
    CHECK(cache({3}) == norm(params, {{3}}));
}
