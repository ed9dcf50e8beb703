#pragma once

#include <cstdint>
#include <vector>

#include "mao/rational.hpp"

namespace mao {

/// Population of size N sampled T times without replacement, round j drawing
/// a uniformly random subset of size m[j].
struct ModelParams {
    long N = 0;
    std::vector<long> m;  // one entry per round

    ModelParams() = default;
    ModelParams(long population, std::vector<long> subset_sizes);
    /// Equal-size convenience: T rounds of size subset_size each.
    ModelParams(long population, long subset_size, int rounds);

    int T() const { return static_cast<int>(m.size()); }
    bool equal_sizes() const;
    /// Sampling fraction m[j]/N.
    Rational p(int j) const {
        Rational q(m[static_cast<size_t>(j)], N);
        q.canonicalize();
        return q;
    }
    /// Equal-size sampling fraction; requires equal_sizes().
    Rational p() const;

    void validate() const;
};

/// X_{=t} (individuals in exactly t subsets) or X_{>=t} (at least t).
struct VariableSpec {
    enum class Kind { exactly, at_least };
    Kind kind = Kind::exactly;
    int t = 0;

    static VariableSpec exactly(int t) { return {Kind::exactly, t}; }
    static VariableSpec at_least(int t) { return {Kind::at_least, t}; }
};

/// Argument of the norm: a list of category values, each in {0..T}.
struct CategoryList {
    std::vector<int> categories;

    size_t r() const { return categories.size(); }
    void validate(const ModelParams& params) const;
};

}  // namespace mao
