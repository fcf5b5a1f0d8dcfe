#include <benchmark/benchmark.h>

#include "pairset/pairset.hpp"

using namespace pairset;

static void BM_SpectrumBlowup(benchmark::State& state) {
  const auto g = iterated_blowup({BlowupBase::SingleEdge, 3});
  Limits limits;
  limits.jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(g, static_cast<int>(state.range(0)), limits));
}
BENCHMARK(BM_SpectrumBlowup)->Args({4, 1})->Args({6, 1})->Args({6, 4})->Unit(benchmark::kMillisecond);

static void BM_PairArrows(benchmark::State& state) {
  OracleOptions opts;
  opts.dedup = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(pair_arrows(6, state.range(0), 3, 5, 5, opts));
}
BENCHMARK(BM_PairArrows)->Args({3, 0})->Args({4, 0})->Args({4, 1})->Unit(benchmark::kMillisecond);

static void BM_NonArrowingSizes(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(non_arrowing_sizes(5, 3, 4, 4));
}
BENCHMARK(BM_NonArrowingSizes)->Unit(benchmark::kMillisecond);

static void BM_EnumerateCandidates(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_candidates(state.range(0), 3));
}
BENCHMARK(BM_EnumerateCandidates)->Arg(15)->Arg(60)->Arg(200)->Arg(500);

static void BM_TheoremMainSweep(benchmark::State& state) {
  for (auto _ : state)
    for (Int m = 12; m <= state.range(0); ++m) benchmark::DoNotOptimize(theorem_main_pair(m, 3));
}
BENCHMARK(BM_TheoremMainSweep)->Arg(500)->Unit(benchmark::kMillisecond);

static void BM_RandomSparse(benchmark::State& state) {
  SparseGenConfig cfg{static_cast<int>(state.range(0)), 3, 6, 1};
  for (auto _ : state) benchmark::DoNotOptimize(random_sparse(cfg));
}
BENCHMARK(BM_RandomSparse)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_CanonicalForm(benchmark::State& state) {
  const auto g = turan_graph(static_cast<int>(state.range(0)), 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
