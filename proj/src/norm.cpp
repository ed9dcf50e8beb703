#include "mao/norm.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mao/combinatorics.hpp"

namespace mao {

namespace {

void require_equal_sizes(const ModelParams& params) {
    if (!params.equal_sizes())
        throw std::invalid_argument("norm engine requires equal subset sizes");
}

// Weight contributed by one round whose membership count is c out of r.
std::vector<Integer> round_weights(const ModelParams& params, int r) {
    std::vector<Integer> w(static_cast<size_t>(r) + 1);
    long m = params.m.front();
    for (int c = 0; c <= r; ++c)
        w[static_cast<size_t>(c)] = falling_factorial(m, static_cast<unsigned>(c)) *
                                    falling_factorial(params.N - m, static_cast<unsigned>(r - c));
    return w;
}

// Enumerate size-t subsets of {0..T-1}, invoking fn with the member list.
template <typename Fn>
void for_each_subset(int T, int t, std::vector<int>& members, int start, Fn&& fn) {
    if (static_cast<int>(members.size()) == t) {
        fn(members);
        return;
    }
    for (int i = start; i <= T - (t - static_cast<int>(members.size())); ++i) {
        members.push_back(i);
        for_each_subset(T, t, members, i + 1, fn);
        members.pop_back();
    }
}

}  // namespace

Integer g_value(const ModelParams& params, const KVector& k, int r) {
    require_equal_sizes(params);
    if (static_cast<int>(k.k.size()) != params.T())
        throw std::invalid_argument("g_value: k vector length must equal T");
    const auto w = round_weights(params, r);
    Integer out = 1;
    for (int ki : k.k) {
        if (ki < 0 || ki > r) throw std::invalid_argument("g_value: k_i outside {0..r}");
        out *= w[static_cast<size_t>(ki)];
    }
    return out;
}

Integer transversal_sum_enum(const ModelParams& params, const CategoryList& spec) {
    require_equal_sizes(params);
    spec.validate(params);
    const int T = params.T();
    const int r = static_cast<int>(spec.r());
    const auto w = round_weights(params, r);

    Integer total = 0;
    std::vector<int> k(static_cast<size_t>(T), 0);
    // Depth-first over the r subsets, maintaining the multiplicity vector.
    auto recurse = [&](auto&& self, size_t j) -> void {
        if (j == spec.r()) {
            Integer g = 1;
            for (int ki : k) g *= w[static_cast<size_t>(ki)];
            total += g;
            return;
        }
        std::vector<int> members;
        for_each_subset(T, spec.categories[j], members, 0, [&](const std::vector<int>& a) {
            for (int i : a) ++k[static_cast<size_t>(i)];
            self(self, j + 1);
            for (int i : a) --k[static_cast<size_t>(i)];
        });
    };
    recurse(recurse, 0);
    return total;
}

Integer transversal_sum(const ModelParams& params, const CategoryList& spec) {
    require_equal_sizes(params);
    spec.validate(params);
    const int T = params.T();
    const int r = static_cast<int>(spec.r());
    const auto w = round_weights(params, r);

    // State: residual quota per list entry (how many rounds each subset A_j
    // still has to claim).  Each round contributes one membership pattern,
    // a subset of the r rows, weighted by w[popcount].
    std::map<std::vector<int>, Integer> states;
    states.emplace(spec.categories, Integer(1));

    for (int round = 0; round < T; ++round) {
        const int remaining = T - round;
        std::map<std::vector<int>, Integer> next;
        for (const auto& [quota, value] : states) {
            for (unsigned mask = 0; mask < (1u << r); ++mask) {
                std::vector<int> q = quota;
                int members = 0;
                bool ok = true;
                for (int j = 0; j < r; ++j) {
                    if (mask & (1u << j)) {
                        if (q[static_cast<size_t>(j)] == 0) {
                            ok = false;
                            break;
                        }
                        --q[static_cast<size_t>(j)];
                        ++members;
                    }
                }
                if (!ok) continue;
                // A row quota larger than the rounds left can never finish.
                for (int j = 0; j < r && ok; ++j)
                    if (q[static_cast<size_t>(j)] > remaining - 1) ok = false;
                if (!ok) continue;
                next[q] += value * w[static_cast<size_t>(members)];
            }
        }
        states = std::move(next);
    }

    std::vector<int> done(static_cast<size_t>(r), 0);
    auto it = states.find(done);
    return it == states.end() ? Integer(0) : it->second;
}

Rational norm(const ModelParams& params, const CategoryList& spec) {
    spec.validate(params);
    const unsigned r = static_cast<unsigned>(spec.r());
    Integer denom = 1;
    const Integer nr = falling_factorial(params.N, r);
    for (int i = 0; i < params.T() - 1; ++i) denom *= nr;
    Rational out(transversal_sum(params, spec), denom);
    out.canonicalize();
    return out;
}

NormCache::NormCache(const ModelParams& params) : params_(params) {}

const Rational& NormCache::operator()(std::vector<int> categories) {
    std::sort(categories.begin(), categories.end());
    auto it = cache_.find(categories);
    if (it == cache_.end())
        it = cache_.emplace(categories, norm(params_, CategoryList{categories})).first;
    return it->second;
}

}  // namespace mao
