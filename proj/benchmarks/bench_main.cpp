#include <benchmark/benchmark.h>

#include "starfree/starfree.hpp"

namespace sf = starfree;

static void BM_StarDn(benchmark::State& state) {
    const auto d = sf::star_witness(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sf::star(d).complexity);
    }
}
BENCHMARK(BM_StarDn)->DenseRange(6, 14, 2);

static void BM_ReverseWitness(benchmark::State& state) {
    const auto d = sf::reversal_witness(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sf::reverse(d).complexity);
    }
}
BENCHMARK(BM_ReverseWitness)->DenseRange(7, 13, 2);

static void BM_ProductWitness(benchmark::State& state) {
    const auto [k, l] = sf::product_witnesses(4, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sf::concat(k, l).complexity);
    }
}
BENCHMARK(BM_ProductWitness)->DenseRange(6, 12, 2);

// Minimizing the raw subset construction (before canonical renumbering).
static void BM_Minimize(benchmark::State& state) {
    const auto nfa = sf::reverse_nfa(sf::reversal_witness(static_cast<std::size_t>(state.range(0))));
    const auto dfa = sf::determinize(nfa);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sf::minimize(dfa).state_count());
    }
    state.counters["states"] = static_cast<double>(dfa.state_count());
}
BENCHMARK(BM_Minimize)->DenseRange(8, 14, 2);

static void BM_Aperiodic(benchmark::State& state) {
    const auto d = sf::star_witness(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sf::is_aperiodic(d).monoid_size);
    }
}
BENCHMARK(BM_Aperiodic)->DenseRange(3, 6);

static void BM_StarSearchN3(benchmark::State& state) {
    sf::EnumerationConfig cfg;
    cfg.states = 3;
    cfg.max_letters = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sf::max_operation_complexity(sf::Operation::Star, cfg).maximum);
    }
}
BENCHMARK(BM_StarSearchN3)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
