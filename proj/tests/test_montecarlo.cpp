#include <doctest.h>

#include <cmath>
#include <numeric>

#include "mao/moments.hpp"
#include "mao/montecarlo.hpp"

using namespace mao;

TEST_CASE("single replicate respects the subset sizes") {
    ModelParams params(15, std::vector<long>{4, 9, 2});
    RandomStream stream(7, 0);
    for (int rep = 0; rep < 20; ++rep) {
        const SampleOutcome outcome = sample_once(params, stream);
        REQUIRE(outcome.K.size() == 15);
        long mass = std::accumulate(outcome.K.begin(), outcome.K.end(), 0L);
        CHECK(mass == 4 + 9 + 2);
        for (int k : outcome.K) {
            CHECK(k >= 0);
            CHECK(k <= 3);
        }
    }
}

TEST_CASE("bounded draws are in range") {
    RandomStream stream(123, 45);
    for (uint64_t bound : {1ULL, 2ULL, 7ULL, 1000ULL}) {
        for (int i = 0; i < 200; ++i) CHECK(stream.next_below(bound) < bound);
    }
}

TEST_CASE("same seed reproduces, different seeds differ") {
    ModelParams params(30, 6, 3);
    const auto specs = std::vector<VariableSpec>{VariableSpec::exactly(1)};
    const SimulationResult a = simulate(params, specs, 2000, 42);
    const SimulationResult b = simulate(params, specs, 2000, 42);
    const SimulationResult c = simulate(params, specs, 2000, 43);
    CHECK(a.histograms == b.histograms);
    CHECK(a.histograms != c.histograms);
}

TEST_CASE("thread count does not change the result") {
    ModelParams params(40, 10, 4);
    const auto specs =
        std::vector<VariableSpec>{VariableSpec::exactly(2), VariableSpec::at_least(1)};
    const SimulationResult serial = simulate(params, specs, 5000, 7, 1);
    const SimulationResult parallel = simulate(params, specs, 5000, 7, 4);
    CHECK(serial.histograms == parallel.histograms);
}

TEST_CASE("empirical law is a pmf and matches the histogram") {
    ModelParams params(20, 5, 3);
    const auto specs = std::vector<VariableSpec>{VariableSpec::exactly(0)};
    const SimulationResult sim = simulate(params, specs, 3000, 1);
    CHECK(sim.empirical.front().sum() == 1);
    uint64_t total = std::accumulate(sim.histograms.front().begin(),
                                     sim.histograms.front().end(), uint64_t{0});
    CHECK(total == 3000);
}

TEST_CASE("empirical mean is close to the exact mean") {
    ModelParams params(100, 20, 5);
    const auto specs = std::vector<VariableSpec>{VariableSpec::exactly(2)};
    const long R = 20000;
    const SimulationResult sim = simulate(params, specs, R, 20240601, 4);
    const double mean = to_double(sim.moments.front().mean);
    const double sigma = std::sqrt(11.0490232739 / static_cast<double>(R));
    CHECK(std::abs(mean - 20.48) < 6 * sigma);
}
