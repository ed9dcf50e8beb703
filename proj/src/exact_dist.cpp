#include "mao/exact_dist.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mao/combinatorics.hpp"

namespace mao {

namespace {

int bits_for(long N) {
    return std::bit_width(static_cast<uint64_t>(N));
}

void check_packable(long N, int nclasses) {
    if (nclasses * bits_for(N) > 64) {
        std::ostringstream msg;
        msg << "profile key overflow: " << nclasses << " classes with N = " << N
            << " exceed 64 bits";
        throw BudgetExceeded(msg.str());
    }
}

// Binomial caches, exact and double.  The exact one memoises on demand: a
// full Pascal triangle of big integers costs O(N^3) bits up front, which is
// prohibitive for large N even when the recursion itself fails fast on the
// state budget.
class ExactChoose {
  public:
    explicit ExactChoose(long) {}
    const Integer& operator()(long n, long k) const {
        const uint64_t key = (static_cast<uint64_t>(n) << 32) | static_cast<uint64_t>(k);
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, binomial(static_cast<unsigned>(n), k)).first;
        return it->second;
    }

  private:
    mutable std::unordered_map<uint64_t, Integer> cache_;
};

class DoubleChoose {
  public:
    explicit DoubleChoose(long N) : rows_(static_cast<size_t>(N) + 1) {
        for (long n = 0; n <= N; ++n) {
            auto& row = rows_[static_cast<size_t>(n)];
            row.resize(static_cast<size_t>(n) + 1);
            row[0] = 1.0;
            for (long k = 1; k <= n; ++k)
                row[static_cast<size_t>(k)] =
                    rows_[static_cast<size_t>(n - 1)][static_cast<size_t>(k - 1)] +
                    (k < n ? rows_[static_cast<size_t>(n - 1)][static_cast<size_t>(k)] : 0.0);
        }
    }
    double operator()(long n, long k) const {
        return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
    }

  private:
    std::vector<std::vector<double>> rows_;
};

void check_round_size(long m, long N) {
    if (m <= 0 || m >= N) throw std::invalid_argument("advance: subset size outside (0, N)");
}

// Depth-first enumeration of allocations (a_0..a_j), a_i <= c[i],
// sum a_i = m, calling leaf(a, weight_product) for each.
template <typename Choose, typename Weight, typename Leaf>
void for_each_allocation(const std::vector<long>& c, long m, const Choose& choose,
                         const Leaf& leaf) {
    const int j = static_cast<int>(c.size()) - 1;
    std::vector<long> suffix(c.size() + 1, 0);  // capacity strictly after class i
    for (int i = j; i >= 0; --i)
        suffix[static_cast<size_t>(i)] = suffix[static_cast<size_t>(i) + 1] + c[static_cast<size_t>(i)];
    std::vector<long> a(c.size(), 0);
    std::vector<Weight> partial(c.size() + 1);
    partial[0] = Weight(1);
    auto recurse = [&](auto&& self, int i, long rem) -> void {
        if (i == j) {
            a[static_cast<size_t>(i)] = rem;
            leaf(a, partial[static_cast<size_t>(i)] * choose(c[static_cast<size_t>(i)], rem));
            return;
        }
        const long lo = std::max<long>(0, rem - suffix[static_cast<size_t>(i) + 1]);
        const long hi = std::min(c[static_cast<size_t>(i)], rem);
        for (long ai = lo; ai <= hi; ++ai) {
            a[static_cast<size_t>(i)] = ai;
            partial[static_cast<size_t>(i) + 1] =
                partial[static_cast<size_t>(i)] * choose(c[static_cast<size_t>(i)], ai);
            self(self, i + 1, rem - ai);
        }
    };
    if (m > suffix[0]) return;  // cannot happen for valid m < N
    recurse(recurse, 0, m);
}

// Number of allocations (a_0..a_j) with a_i <= c[i] and sum m, counted in
// saturating floating point (it only feeds a work estimate).
double count_allocations(const std::vector<long>& c, long m) {
    std::vector<double> ways(static_cast<size_t>(m) + 1, 0.0);
    ways[0] = 1.0;
    for (long cap : c) {
        std::vector<double> pref(static_cast<size_t>(m) + 2, 0.0);
        for (long s = 0; s <= m; ++s) pref[static_cast<size_t>(s) + 1] = pref[static_cast<size_t>(s)] + ways[static_cast<size_t>(s)];
        for (long s = m; s >= 0; --s) {
            const long lo = std::max<long>(0, s - cap);
            ways[static_cast<size_t>(s)] = pref[static_cast<size_t>(s) + 1] - pref[static_cast<size_t>(lo)];
        }
    }
    return ways[static_cast<size_t>(m)];
}

std::vector<long> successor_profile(const std::vector<long>& c, const std::vector<long>& a) {
    std::vector<long> out(c.size() + 1);
    out[0] = c[0] - a[0];
    for (size_t i = 1; i < c.size(); ++i) out[i] = c[i] - a[i] + a[i - 1];
    out[c.size()] = a[c.size() - 1];
    return out;
}

long variable_value(const std::vector<long>& c, const VariableSpec& var) {
    if (var.kind == VariableSpec::Kind::exactly) {
        return var.t < static_cast<int>(c.size()) ? c[static_cast<size_t>(var.t)] : 0;
    }
    long tail = 0;
    for (size_t i = std::max(var.t, 0); i < c.size(); ++i) tail += c[i];
    return tail;
}

}  // namespace

long OccupancyProfile::population() const {
    return std::accumulate(c.begin(), c.end(), 0L);
}

long OccupancyProfile::membership_mass() const {
    long mass = 0;
    for (size_t i = 0; i < c.size(); ++i) mass += static_cast<long>(i) * c[i];
    return mass;
}

uint64_t pack_profile(const std::vector<long>& c, long N) {
    check_packable(N, static_cast<int>(c.size()));
    const int bits = bits_for(N);
    uint64_t key = 0;
    for (long ci : c) key = (key << bits) | static_cast<uint64_t>(ci);
    return key;
}

std::vector<long> unpack_profile(uint64_t key, int nclasses, long N) {
    const int bits = bits_for(N);
    const uint64_t mask = (bits == 64) ? ~0ull : ((1ull << bits) - 1);
    std::vector<long> c(static_cast<size_t>(nclasses));
    for (int i = nclasses - 1; i >= 0; --i) {
        c[static_cast<size_t>(i)] = static_cast<long>(key & mask);
        key >>= bits;
    }
    return c;
}

ProfileDistribution ProfileDistribution::initial(long N, NumericMode mode) {
    ProfileDistribution dist;
    dist.N = N;
    dist.rounds = 0;
    dist.mode = mode;
    const uint64_t key = pack_profile({N}, N);
    if (mode == NumericMode::exact)
        dist.weights.emplace(key, Integer(1));
    else
        dist.float_probs.emplace(key, 1.0);
    return dist;
}

Rational ProfileDistribution::probability(const OccupancyProfile& profile) const {
    const uint64_t key = pack_profile(profile.c, N);
    if (mode == NumericMode::exact) {
        auto it = weights.find(key);
        if (it == weights.end()) return 0;
        Rational q(it->second, denominator);
        q.canonicalize();
        return q;
    }
    auto it = float_probs.find(key);
    return it == float_probs.end() ? Rational(0) : rational_from_double(it->second);
}

std::vector<std::pair<OccupancyProfile, Rational>> ProfileDistribution::entries() const {
    std::vector<std::pair<OccupancyProfile, Rational>> out;
    auto emit = [&](uint64_t key, Rational q) {
        out.emplace_back(OccupancyProfile{unpack_profile(key, rounds + 1, N)}, std::move(q));
    };
    if (mode == NumericMode::exact) {
        for (const auto& [key, w] : weights) {
            Rational q(w, denominator);
            q.canonicalize();
            emit(key, std::move(q));
        }
    } else {
        for (const auto& [key, p] : float_probs) emit(key, rational_from_double(p));
    }
    return out;
}

ProfileDistribution advance(const ProfileDistribution& dist, long m_next, size_t state_budget) {
    check_round_size(m_next, dist.N);
    check_packable(dist.N, dist.rounds + 2);
    const long N = dist.N;
    const int nclasses = dist.rounds + 1;

    ProfileDistribution next;
    next.N = N;
    next.rounds = dist.rounds + 1;
    next.mode = dist.mode;

    size_t effective_budget = state_budget;
    auto over_budget = [&](size_t count) {
        if (count > effective_budget) {
            std::ostringstream msg;
            msg << "state budget exceeded: " << count << " occupancy profiles stored, budget "
                << effective_budget;
            throw BudgetExceeded(msg.str());
        }
    };

    if (dist.mode == NumericMode::exact) {
        ExactChoose choose(N);
        next.denominator = dist.denominator * choose(N, m_next);
        // Integer weights can reach the size of the common denominator, so a
        // pure state count would let large-N instances eat arbitrary memory
        // before tripping the budget.  Scale the cap by the weight size,
        // metering roughly 2 GB of stored digits.
        const size_t weight_bytes =
            mpz_sizeinbase(next.denominator.get_mpz_t(), 2) / 8 + sizeof(Integer) + 16;
        effective_budget =
            std::min(state_budget, (size_t{2} << 30) / weight_bytes + 1000);
        // Each transition multiplies integers of roughly the denominator's
        // size, so pre-count the round's transitions and refuse work that the
        // state budget alone would only stop after minutes of grinding.
        const double limbs = static_cast<double>(mpz_size(next.denominator.get_mpz_t()) + 2);
        double transitions = 0;
        for (const auto& [key, weight] : dist.weights)
            transitions += count_allocations(unpack_profile(key, nclasses, N), m_next);
        if (transitions * limbs > 1e10) {
            std::ostringstream msg;
            msg << "state budget exceeded: round needs ~" << transitions
                << " transitions on " << limbs << "-limb integers";
            throw BudgetExceeded(msg.str());
        }
        for (const auto& [key, weight] : dist.weights) {
            const auto c = unpack_profile(key, nclasses, N);
            for_each_allocation<ExactChoose, Integer>(
                c, m_next, choose, [&](const std::vector<long>& a, Integer w) {
                    next.weights[pack_profile(successor_profile(c, a), N)] += weight * w;
                    over_budget(next.weights.size());
                });
        }
    } else {
        DoubleChoose choose(N);
        const double inv_total = 1.0 / choose(N, m_next);
        for (const auto& [key, prob] : dist.float_probs) {
            const auto c = unpack_profile(key, nclasses, N);
            const double scale = prob * inv_total;
            for_each_allocation<DoubleChoose, double>(
                c, m_next, choose, [&](const std::vector<long>& a, double w) {
                    next.float_probs[pack_profile(successor_profile(c, a), N)] += scale * w;
                    over_budget(next.float_probs.size());
                });
        }
    }
    return next;
}

namespace {

std::vector<long> sorted_sizes_desc(const ModelParams& params) {
    std::vector<long> m = params.m;
    std::sort(m.begin(), m.end(), std::greater<long>());
    return m;
}

}  // namespace

ProfileDistribution prefix_profile_distribution(const ModelParams& params, NumericMode mode,
                                                size_t state_budget) {
    params.validate();
    const auto m = sorted_sizes_desc(params);
    ProfileDistribution dist = ProfileDistribution::initial(params.N, mode);
    for (size_t j = 0; j + 1 < m.size(); ++j) dist = advance(dist, m[j], state_budget);
    return dist;
}

ProfileDistribution exact_profile_distribution(const ModelParams& params, NumericMode mode,
                                               size_t state_budget) {
    const auto m = sorted_sizes_desc(params);
    ProfileDistribution dist = prefix_profile_distribution(params, mode, state_budget);
    return advance(dist, m.back(), state_budget);
}

Pmf marginal_pmf(const ProfileDistribution& dist, const VariableSpec& var) {
    Pmf pmf;
    pmf.mode = dist.mode;
    pmf.p.assign(static_cast<size_t>(dist.N) + 1, Rational(0));
    if (dist.mode == NumericMode::exact) {
        std::vector<Integer> numer(pmf.p.size());
        for (const auto& [key, w] : dist.weights) {
            const auto c = unpack_profile(key, dist.rounds + 1, dist.N);
            numer[static_cast<size_t>(variable_value(c, var))] += w;
        }
        for (size_t k = 0; k < numer.size(); ++k) {
            pmf.p[k] = Rational(numer[k], dist.denominator);
            pmf.p[k].canonicalize();
        }
    } else {
        std::vector<double> prob(pmf.p.size(), 0.0);
        for (const auto& [key, p] : dist.float_probs) {
            const auto c = unpack_profile(key, dist.rounds + 1, dist.N);
            prob[static_cast<size_t>(variable_value(c, var))] += p;
        }
        for (size_t k = 0; k < prob.size(); ++k) pmf.p[k] = rational_from_double(prob[k]);
    }
    return pmf;
}

Pmf project_last_round(const ProfileDistribution& prefix, long m_last, const VariableSpec& var) {
    check_round_size(m_last, prefix.N);
    const long N = prefix.N;
    const int j = prefix.rounds;  // classes 0..j before the last round
    const int T = j + 1;
    if (var.t < 0 || var.t > T)
        throw std::invalid_argument("project_last_round: t outside {0..T}");

    Pmf pmf;
    pmf.mode = prefix.mode;
    pmf.p.assign(static_cast<size_t>(N) + 1, Rational(0));

    if (var.kind == VariableSpec::Kind::at_least && var.t == 0) {
        // Every individual is in at least zero subsets.
        pmf.p[static_cast<size_t>(N)] = 1;
        return pmf;
    }

    // The last-round allocation a_i ~ joint hypergeometric across classes.
    // X_{=t} depends only on (a_{t-1}, a_t); X_{>=t} only on a_{t-1}.
    const bool exact = prefix.mode == NumericMode::exact;
    ExactChoose echoose(exact ? N : 0);
    DoubleChoose dchoose(exact ? 0 : N);
    std::vector<Integer> numer(pmf.p.size());
    std::vector<double> fprob(pmf.p.size(), 0.0);
    const double inv_total = exact ? 0.0 : 1.0 / dchoose(N, m_last);

    auto single_class = [&](const std::vector<long>& c, int cls, const auto& weight_of,
                            const auto& value_of) {
        // a_cls ~ Hyp(c[cls], N - c[cls], m_last)
        const long ccls = c[static_cast<size_t>(cls)];
        const long lo = std::max<long>(0, m_last - (N - ccls));
        const long hi = std::min(ccls, m_last);
        for (long x = lo; x <= hi; ++x) weight_of(value_of(x), ccls, x);
    };

    auto process_state = [&](const std::vector<long>& c, const Integer* w_exact,
                             double p_float) {
        auto add_exact1 = [&](long value, long ccls, long x) {
            numer[static_cast<size_t>(value)] +=
                *w_exact * echoose(ccls, x) * echoose(N - ccls, m_last - x);
        };
        auto add_float1 = [&](long value, long ccls, long x) {
            fprob[static_cast<size_t>(value)] +=
                p_float * inv_total * dchoose(ccls, x) * dchoose(N - ccls, m_last - x);
        };
        if (var.kind == VariableSpec::Kind::at_least) {
            long tail = 0;
            for (int s = var.t; s <= j; ++s) tail += c[static_cast<size_t>(s)];
            const int cls = var.t - 1;  // value = tail + a_{t-1}
            auto value_of = [&](long x) { return tail + x; };
            if (exact)
                single_class(c, cls, add_exact1, value_of);
            else
                single_class(c, cls, add_float1, value_of);
            return;
        }
        // kind == exactly
        if (var.t == 0) {
            auto value_of = [&](long x) { return c[0] - x; };
            if (exact)
                single_class(c, 0, add_exact1, value_of);
            else
                single_class(c, 0, add_float1, value_of);
            return;
        }
        if (var.t == T) {
            auto value_of = [&](long x) { return x; };
            if (exact)
                single_class(c, j, add_exact1, value_of);
            else
                single_class(c, j, add_float1, value_of);
            return;
        }
        // 1 <= t <= j: value = c_t - a_t + a_{t-1}; pair marginal over the
        // two classes with the rest pooled.
        const long c1 = c[static_cast<size_t>(var.t - 1)];
        const long c2 = c[static_cast<size_t>(var.t)];
        const long rest = N - c1 - c2;
        for (long x = std::max<long>(0, m_last - c2 - rest); x <= std::min(c1, m_last); ++x) {
            const long lo = std::max<long>(0, m_last - x - rest);
            const long hi = std::min(c2, m_last - x);
            for (long y = lo; y <= hi; ++y) {
                const long value = c2 - y + x;
                if (exact) {
                    numer[static_cast<size_t>(value)] += *w_exact * echoose(c1, x) *
                                                         echoose(c2, y) *
                                                         echoose(rest, m_last - x - y);
                } else {
                    fprob[static_cast<size_t>(value)] += p_float * inv_total * dchoose(c1, x) *
                                                         dchoose(c2, y) *
                                                         dchoose(rest, m_last - x - y);
                }
            }
        }
    };

    if (exact) {
        for (const auto& [key, w] : prefix.weights)
            process_state(unpack_profile(key, j + 1, N), &w, 0.0);
        Integer denom = prefix.denominator * echoose(N, m_last);
        for (size_t k = 0; k < numer.size(); ++k) {
            pmf.p[k] = Rational(numer[k], denom);
            pmf.p[k].canonicalize();
        }
    } else {
        for (const auto& [key, p] : prefix.float_probs)
            process_state(unpack_profile(key, j + 1, N), nullptr, p);
        for (size_t k = 0; k < fprob.size(); ++k) pmf.p[k] = rational_from_double(fprob[k]);
    }
    return pmf;
}

Pmf exact_marginal_pmf(const ModelParams& params, const VariableSpec& var, NumericMode mode,
                       size_t state_budget) {
    const auto m = sorted_sizes_desc(params);
    ProfileDistribution prefix = prefix_profile_distribution(params, mode, state_budget);
    return project_last_round(prefix, m.back(), var);
}

}  // namespace mao
