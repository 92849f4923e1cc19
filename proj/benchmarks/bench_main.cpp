// Microbenchmarks for the construction and solving hot paths.

#include "exactcolor/cnf.hpp"
#include "exactcolor/graph.hpp"
#include "exactcolor/reductions.hpp"
#include "exactcolor/solver.hpp"
#include "exactcolor/verify.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace exactcolor;

namespace {

Graph dense_random_graph(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_graph(rng, n, n);
}

void BM_SigmaConstruction(benchmark::State& state) {
    const CnfFormula phi = canonical_unsatisfiable();
    for (auto _ : state) {
        Graph g = sigma(phi);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_SigmaConstruction);

void BM_ChiSigmaSat(benchmark::State& state) {
    const Graph g = sigma(canonical_satisfiable());
    for (auto _ : state) {
        ChiResult res = chromatic_number(g);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_ChiSigmaSat);

void BM_ChiSigmaUnsat(benchmark::State& state) {
    const Graph g = sigma(canonical_unsatisfiable());
    for (auto _ : state) {
        ChiResult res = chromatic_number(g);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_ChiSigmaUnsat);

void BM_ChiRhoUnsat(benchmark::State& state) {
    const Graph g = rho_oracle(canonical_unsatisfiable());
    for (auto _ : state) {
        ChiResult res = chromatic_number(g);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_ChiRhoUnsat);

void BM_ChiCombinedK2(benchmark::State& state) {
    const Graph g = wagner_combine(canonical_chain(2, state.range(0))).flatten();
    for (auto _ : state) {
        ChiResult res = chromatic_number(g);
        benchmark::DoNotOptimize(res);
    }
    state.SetLabel("n=" + std::to_string(g.vertex_count()));
}
BENCHMARK(BM_ChiCombinedK2)->DenseRange(0, 4);

void BM_DsaturUpperBound(benchmark::State& state) {
    const Graph g = dense_random_graph(static_cast<int>(state.range(0)), 12345);
    for (auto _ : state) {
        auto bound = dsatur_upper_bound(g);
        benchmark::DoNotOptimize(bound);
    }
}
BENCHMARK(BM_DsaturUpperBound)->Arg(20)->Arg(40)->Arg(80);

void BM_CliqueLowerBound(benchmark::State& state) {
    const Graph g = dense_random_graph(static_cast<int>(state.range(0)), 12345);
    for (auto _ : state) {
        auto clique = clique_lower_bound(g);
        benchmark::DoNotOptimize(clique);
    }
}
BENCHMARK(BM_CliqueLowerBound)->Arg(20)->Arg(40)->Arg(80);

void BM_RefuteFourColoring(benchmark::State& state) {
    const Graph g = join(cycle_graph(5), complete_graph(2));
    for (auto _ : state) {
        auto res = is_k_colorable(g, 4);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_RefuteFourColoring);

} // namespace

BENCHMARK_MAIN();
