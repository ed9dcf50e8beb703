#include "mao/montecarlo.hpp"

#include <numeric>
#include <stdexcept>
#include <thread>

namespace mao {

namespace {

constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;

uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

RandomStream::RandomStream(uint64_t seed, uint64_t replicate)
    : state_(mix64(seed + kGolden) ^ mix64(replicate * kGolden + 1)) {}

uint64_t RandomStream::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

uint64_t RandomStream::next_below(uint64_t bound) {
    // Rejection sampling over the largest multiple of bound.
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t draw;
    do {
        draw = next_u64();
    } while (draw >= limit);
    return draw % bound;
}

SampleOutcome sample_once(const ModelParams& params, RandomStream& stream) {
    const size_t N = static_cast<size_t>(params.N);
    SampleOutcome outcome;
    outcome.K.assign(N, 0);
    std::vector<long> perm(N);
    std::iota(perm.begin(), perm.end(), 0L);
    for (long mj : params.m) {
        // Partial Fisher-Yates: after the loop the first m_j entries are a
        // uniform random subset.  The array stays a permutation, so the next
        // round can shuffle it again in place.
        for (long i = 0; i < mj; ++i) {
            const uint64_t r =
                static_cast<uint64_t>(i) + stream.next_below(static_cast<uint64_t>(params.N - i));
            std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(r)]);
            ++outcome.K[static_cast<size_t>(perm[static_cast<size_t>(i)])];
        }
    }
    return outcome;
}

SimulationResult simulate(const ModelParams& params, const std::vector<VariableSpec>& specs,
                          long replicates, uint64_t seed, int threads) {
    params.validate();
    if (replicates < 1) throw std::invalid_argument("simulate: need at least one replicate");
    if (threads < 1) threads = 1;

    const size_t N = static_cast<size_t>(params.N);
    const int T = params.T();

    auto run_chunk = [&](long begin, long end, std::vector<std::vector<uint64_t>>& hist) {
        std::vector<long> perm(N);
        std::vector<int> K(N);
        std::vector<long> occupancy(static_cast<size_t>(T) + 1);
        for (long rep = begin; rep < end; ++rep) {
            RandomStream stream(seed, static_cast<uint64_t>(rep));
            std::iota(perm.begin(), perm.end(), 0L);
            std::fill(K.begin(), K.end(), 0);
            for (long mj : params.m) {
                for (long i = 0; i < mj; ++i) {
                    const uint64_t r = static_cast<uint64_t>(i) +
                                       stream.next_below(static_cast<uint64_t>(params.N - i));
                    std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(r)]);
                    ++K[static_cast<size_t>(perm[static_cast<size_t>(i)])];
                }
            }
            std::fill(occupancy.begin(), occupancy.end(), 0L);
            for (int k : K) ++occupancy[static_cast<size_t>(k)];
            for (size_t s = 0; s < specs.size(); ++s) {
                long value = 0;
                if (specs[s].kind == VariableSpec::Kind::exactly) {
                    value = occupancy[static_cast<size_t>(specs[s].t)];
                } else {
                    for (int u = specs[s].t; u <= T; ++u) value += occupancy[static_cast<size_t>(u)];
                }
                ++hist[s][static_cast<size_t>(value)];
            }
        }
    };

    std::vector<std::vector<std::vector<uint64_t>>> partials(
        static_cast<size_t>(threads),
        std::vector<std::vector<uint64_t>>(specs.size(), std::vector<uint64_t>(N + 1, 0)));
    if (threads == 1) {
        run_chunk(0, replicates, partials[0]);
    } else {
        std::vector<std::thread> workers;
        const long chunk = (replicates + threads - 1) / threads;
        for (int w = 0; w < threads; ++w) {
            const long begin = static_cast<long>(w) * chunk;
            const long end = std::min(replicates, begin + chunk);
            if (begin >= end) break;
            workers.emplace_back(run_chunk, begin, end, std::ref(partials[static_cast<size_t>(w)]));
        }
        for (auto& worker : workers) worker.join();
    }

    SimulationResult result;
    result.seed = seed;
    result.replicates = replicates;
    result.specs = specs;
    result.histograms.assign(specs.size(), std::vector<uint64_t>(N + 1, 0));
    for (const auto& partial : partials)
        for (size_t s = 0; s < specs.size(); ++s)
            for (size_t v = 0; v <= N; ++v) result.histograms[s][v] += partial[s][v];

    for (size_t s = 0; s < specs.size(); ++s) {
        Pmf pmf;
        pmf.mode = NumericMode::exact;  // counts over R are exact rationals
        pmf.p.resize(N + 1);
        for (size_t v = 0; v <= N; ++v) {
            pmf.p[v] = Rational(Integer(static_cast<unsigned long>(result.histograms[s][v])),
                                Integer(replicates));
            pmf.p[v].canonicalize();
        }
        result.moments.push_back(pmf_moments(pmf));
        result.empirical.push_back(std::move(pmf));
    }
    return result;
}

}  // namespace mao
