#include "mao/oracle.hpp"

#include <sstream>
#include <stdexcept>

#include "mao/combinatorics.hpp"

namespace mao {

namespace {

Integer outcome_count(const ModelParams& params) {
    Integer total = 1;
    for (long mj : params.m) total *= binomial(static_cast<unsigned>(params.N), mj);
    return total;
}

void check_budget(const ModelParams& params, unsigned long budget, Integer& total) {
    total = outcome_count(params);
    if (total > static_cast<unsigned long>(budget)) {
        std::ostringstream msg;
        msg << "oracle budget exceeded: " << total.get_str() << " outcomes, budget " << budget;
        throw BudgetExceeded(msg.str());
    }
}

// Visit every tuple of subsets, maintaining per-individual membership counts
// K; fn is called once per outcome.
template <typename Fn>
void for_each_outcome(const ModelParams& params, Fn&& fn) {
    const int T = params.T();
    std::vector<int> K(static_cast<size_t>(params.N), 0);
    std::vector<long> members;
    auto choose_round = [&](auto&& self, int round) -> void {
        if (round == T) {
            fn(K);
            return;
        }
        const long mj = params.m[static_cast<size_t>(round)];
        auto choose_members = [&](auto&& inner, long start, long left) -> void {
            if (left == 0) {
                self(self, round + 1);
                return;
            }
            for (long i = start; i <= params.N - left; ++i) {
                ++K[static_cast<size_t>(i)];
                inner(inner, i + 1, left - 1);
                --K[static_cast<size_t>(i)];
            }
        };
        choose_members(choose_members, 0, mj);
    };
    choose_round(choose_round, 0);
}

std::vector<long> profile_of(const std::vector<int>& K, int T) {
    std::vector<long> c(static_cast<size_t>(T) + 1, 0);
    for (int k : K) ++c[static_cast<size_t>(k)];
    return c;
}

}  // namespace

ExhaustiveLaw enumerate_all(const ModelParams& params, unsigned long outcome_budget) {
    params.validate();
    ExhaustiveLaw out;
    check_budget(params, outcome_budget, out.outcomes);

    out.law.N = params.N;
    out.law.rounds = params.T();
    out.law.mode = NumericMode::exact;
    out.law.denominator = out.outcomes;
    for_each_outcome(params, [&](const std::vector<int>& K) {
        out.law.weights[pack_profile(profile_of(K, params.T()), params.N)] += 1;
    });
    return out;
}

Rational oracle_factorial_moment(const ModelParams& params, const std::map<int, int>& counts,
                                 unsigned long outcome_budget) {
    params.validate();
    Integer total;
    check_budget(params, outcome_budget, total);
    Integer sum = 0;
    for_each_outcome(params, [&](const std::vector<int>& K) {
        const auto c = profile_of(K, params.T());
        Integer term = 1;
        for (const auto& [t, n] : counts)
            term *= falling_factorial(c[static_cast<size_t>(t)], static_cast<unsigned>(n));
        sum += term;
    });
    Rational out(sum, total);
    out.canonicalize();
    return out;
}

Rational oracle_joint_prob(const ModelParams& params, int t, int k, unsigned long outcome_budget) {
    params.validate();
    if (k < 1 || static_cast<long>(k) > params.N)
        throw std::invalid_argument("oracle_joint_prob: k outside 1..N");
    Integer total;
    check_budget(params, outcome_budget, total);
    Integer hits = 0;
    for_each_outcome(params, [&](const std::vector<int>& K) {
        for (int i = 0; i < k; ++i)
            if (K[static_cast<size_t>(i)] != t) return;
        hits += 1;
    });
    Rational out(hits, total);
    out.canonicalize();
    return out;
}

}  // namespace mao
