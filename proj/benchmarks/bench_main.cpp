// Micro-benchmarks for the three hot paths: the pebble-game rank, exact
// rational rank extraction (against its floating-point counterpart), and
// the circuit reduction search.

#include "cylrig/constructions.hpp"
#include "cylrig/framework.hpp"
#include "cylrig/graph.hpp"
#include "cylrig/matrix.hpp"
#include "cylrig/rng.hpp"
#include "cylrig/sparsity.hpp"
#include "cylrig/stress.hpp"

#include <benchmark/benchmark.h>

#include <algorithm>

namespace {

using namespace cylrig;

Graph near_tight_graph(int n, std::uint64_t seed) {
    Rng rng(seed);
    const int m = std::min(2 * n - 2, n * (n - 1) / 2);
    return random_graph(n, m, rng);
}

void BM_PebbleRank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = near_tight_graph(n, 42);
    for (auto _ : state) benchmark::DoNotOptimize(rank22(g));
}
BENCHMARK(BM_PebbleRank)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_RigidityRankExact(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = near_tight_graph(n, 43);
    Rng rng(7);
    const Framework<Rat> f = random_framework(g, rng, 16);
    const Mat<Rat> m = rigidity_matrix(f);
    for (auto _ : state) benchmark::DoNotOptimize(rank_exact(m));
}
BENCHMARK(BM_RigidityRankExact)->Arg(6)->Arg(8)->Arg(10)->Arg(12);

void BM_RigidityRankFloat(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = near_tight_graph(n, 43);
    Rng rng(7);
    const Framework<Rat> f = random_framework(g, rng, 16);
    const Mat<double> m = to_f64(rigidity_matrix(f));
    for (auto _ : state) benchmark::DoNotOptimize(rank_f64(m));
}
BENCHMARK(BM_RigidityRankFloat)->Arg(6)->Arg(8)->Arg(10)->Arg(12);

void BM_EquilibriumStress(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng gen(11);
    const Graph g = random_circuit(n, gen).graph;
    Rng rng(12);
    const Framework<Rat> f = random_framework(g, rng, 16);
    for (auto _ : state) benchmark::DoNotOptimize(equilibrium_stress(f));
}
BENCHMARK(BM_EquilibriumStress)->Arg(6)->Arg(8)->Arg(10);

void BM_ReduceToBase(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng gen(13);
    const Graph g = random_circuit(n, gen).graph;
    for (auto _ : state) benchmark::DoNotOptimize(reduce_to_base(g));
}
BENCHMARK(BM_ReduceToBase)->Arg(7)->Arg(9)->Arg(11);

} // namespace

BENCHMARK_MAIN();
