#include <doctest.h>

#include <stdexcept>

#include "mao/combinatorics.hpp"

using namespace mao;

TEST_CASE("falling factorial") {
    CHECK(falling_factorial(5L, 0) == 1);
    CHECK(falling_factorial(5L, 3) == 60);
    CHECK(falling_factorial(5L, 6) == 0);
    CHECK(falling_factorial(Rational(1, 2), 2) == Rational(-1, 4));
}

TEST_CASE("binomial and factorial") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(10, -1) == 0);
    CHECK(binomial(10, 11) == 0);
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
}

TEST_CASE("Stirling numbers of the second kind") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(8, 4) == 1701);
    CHECK(stirling2(3, 5) == 0);
    CHECK_THROWS_AS(stirling2(9, 2), std::invalid_argument);
}

TEST_CASE("Stirling conversion identity x^n = sum_k S(n,k) (x)_k") {
    for (long x : {0L, 1L, 4L, 7L}) {
        for (unsigned n = 1; n <= 8; ++n) {
            Integer pow = 1;
            for (unsigned i = 0; i < n; ++i) pow *= x;
            Integer sum = 0;
            for (unsigned k = 0; k <= n; ++k) sum += stirling2(n, k) * falling_factorial(x, k);
            CHECK(sum == pow);
        }
    }
}

TEST_CASE("decimal rendering of rationals") {
    CHECK(to_decimal_string(Rational(512, 25)) == "20.4800000000");
    CHECK(to_decimal_string(Rational(0)) == "0");
    CHECK(to_decimal_string(Rational(-1, 8), 3) == "-0.125");
    CHECK(to_decimal_string(Rational(1, 3), 5) == "0.33333");
    CHECK(to_decimal_string(Rational(12500), 3) == "12500");
}
