#include <doctest.h>

#include "mao/pmf.hpp"

using namespace mao;

TEST_CASE("point mass") {
    const Pmf pm = Pmf::point_mass(3);
    CHECK(pm.size() == 4);
    CHECK(pm.p[3] == 1);
    CHECK(pm.sum() == 1);
}

TEST_CASE("moments of a known law") {
    // fair Bernoulli on {0, 1}
    Pmf coin;
    coin.p = {Rational(1, 2), Rational(1, 2)};
    const MomentReport r = pmf_moments(coin);
    CHECK(r.mean == Rational(1, 2));
    CHECK(r.variance == Rational(1, 4));
    CHECK(r.third_central == 0);
    CHECK(r.fourth_central == Rational(1, 16));
}

TEST_CASE("distances") {
    Pmf a, b;
    a.p = {Rational(1, 2), Rational(1, 2)};
    b.p = {Rational(1, 4), Rational(1, 4), Rational(1, 2)};
    CHECK(distance(a, a, DistanceMetric::tv) == 0);
    CHECK(distance(a, b, DistanceMetric::tv) == doctest::Approx(0.5));
    CHECK(distance(a, b, DistanceMetric::ks) == doctest::Approx(0.5));
    CHECK(distance(b, a, DistanceMetric::tv) == distance(a, b, DistanceMetric::tv));
}

TEST_CASE("tail p-values") {
    Pmf law;
    law.p = {Rational(1, 10), Rational(1, 5), Rational(2, 5), Rational(3, 10)};
    CHECK(tail_pvalue(law, 0, TailSide::lower) == Rational(1, 10));
    CHECK(tail_pvalue(law, 2, TailSide::upper) == Rational(7, 10));
    CHECK(tail_pvalue(law, 3, TailSide::upper) == Rational(3, 10));
    CHECK(tail_pvalue(law, 0, TailSide::upper) == 1);
    CHECK(tail_pvalue(law, 3, TailSide::two_sided) == Rational(3, 5));
    CHECK(tail_pvalue(law, 1, TailSide::two_sided) == Rational(3, 5));
}
