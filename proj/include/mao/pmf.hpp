#pragma once

#include <vector>

#include "mao/rational.hpp"

namespace mao {

/// Finite law on {0..len-1}.  Probabilities are stored as rationals even in
/// float mode (each double converts exactly); the mode flag records which
/// arithmetic produced them.
struct Pmf {
    std::vector<Rational> p;
    NumericMode mode = NumericMode::exact;

    size_t size() const { return p.size(); }
    Rational sum() const;
    static Pmf point_mass(long value, NumericMode mode = NumericMode::exact);
};

struct MomentReport {
    Rational mean;
    Rational variance;
    Rational third_central;
    Rational fourth_central;
    NumericMode mode = NumericMode::exact;
};

/// First four moments by direct summation over the support.
MomentReport pmf_moments(const Pmf& pmf);

enum class DistanceMetric { tv, ks };

/// TV = (1/2) sum |a-b|;  KS = max |CDF_a - CDF_b|.  Supports are aligned by
/// zero-padding the shorter pmf.
double distance(const Pmf& a, const Pmf& b, DistanceMetric metric);

enum class TailSide { upper, lower, two_sided };

/// upper: P(X >= obs); lower: P(X <= obs); two-sided: min(1, 2 min(up, lo)).
Rational tail_pvalue(const Pmf& null_law, long observed, TailSide side);

}  // namespace mao
