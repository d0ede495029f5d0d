// Serial versus OpenMP kernels on the subset sums that dominate run time.

#include <benchmark/benchmark.h>

#include <random>

#include "bc/graph.hpp"
#include "bc/number.hpp"
#include "bc/whitney.hpp"

using namespace bc;

namespace {

Exec mode(const benchmark::State& s) { return s.range(1) ? Exec::parallel : Exec::serial; }

void BM_SumFull(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto f = [](Mask a) { return BigInt(parity_sign(a) * static_cast<long>(a % 97)); };
    for (auto _ : state) benchmark::DoNotOptimize(sum_full<BigInt>(n, f, mode(state)));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}

void BM_SumPruned(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(5);
    std::vector<Mask> broken;
    for (int i = 0; i < n; ++i) {
        Mask b = 0;
        while (popcount(b) < 2) b |= bit(std::uniform_int_distribution<int>(0, n - 1)(rng));
        broken.push_back(b);
    }
    auto f = [](Mask a) { return BigInt(parity_sign(a) * static_cast<long>(a % 97)); };
    for (auto _ : state) benchmark::DoNotOptimize(sum_pruned<BigInt>(n, broken, f, mode(state)));
}

void BM_ChromaticBrokenCircuit(benchmark::State& state) {
    // K_7 has 21 edges.
    Graph g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(chromatic_polynomial(g, ChromaticMethod::broken_circuit, mode(state)));
}

void BM_DominationPruned(benchmark::State& state) {
    std::mt19937_64 rng(3);
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.4, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(domination_polynomial(g, DominationMethod::bnh, mode(state)));
}

void BM_TotientSubsetSum(benchmark::State& state) {
    auto h = MultiplicativeFunction::parse("identity");
    for (auto _ : state)
        benchmark::DoNotOptimize(totient_h(static_cast<std::uint64_t>(state.range(0)), h, TotientMethod::subset_sum,
                                           mode(state)));
}

}  // namespace

BENCHMARK(BM_SumFull)->ArgsProduct({{16, 20}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SumPruned)->ArgsProduct({{20, 24}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChromaticBrokenCircuit)->ArgsProduct({{6, 7}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DominationPruned)->ArgsProduct({{14, 18}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TotientSubsetSum)->ArgsProduct({{210, 240}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
