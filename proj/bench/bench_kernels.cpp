// Serial reference vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "perfect/expectation.hpp"
#include "perfect/graph.hpp"
#include "perfect/holes.hpp"

using namespace perfect;

namespace {

Graph bench_graph(int n) { return generate_er({n, 0.5, 42}); }

void BM_HolesSerial(benchmark::State& state) {
    const auto g = bench_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::find_odd_holes_serial(g, std::nullopt, 5, HoleKind::Hole));
}

void BM_HolesOmp(benchmark::State& state) {
    const auto g = bench_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(parallel::find_odd_holes_omp(g, 5, HoleKind::Hole));
}

void BM_MonteCarloSerial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(reference::monte_carlo_counts_serial(n, 0.5, 2000, 1));
}

void BM_MonteCarloOmp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_counts(n, 0.5, 2000, 1));
}

}  // namespace

BENCHMARK(BM_HolesSerial)->Arg(16)->Arg(22)->Arg(28)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HolesOmp)->Arg(16)->Arg(22)->Arg(28)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloSerial)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloOmp)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
