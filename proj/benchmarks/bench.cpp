#include "fkext/canonical.hpp"
#include "fkext/matching.hpp"
#include "fkext/polynomial.hpp"
#include "fkext/spectral.hpp"

#include <benchmark/benchmark.h>

using namespace fkext;

static void BM_SignlessRadius(benchmark::State& state) {
  const Graph g = extremal_graph(ExtremalParams(static_cast<int>(state.range(0)), 1, 4));
  const SymMatrix q = build_matrix(g, MatrixKind::signless_laplacian);
  for (auto _ : state) benchmark::DoNotOptimize(largest_eigenvalue(q));
}
BENCHMARK(BM_SignlessRadius)->Arg(16)->Arg(32)->Arg(64);

static void BM_DistanceRadiusBlocks(benchmark::State& state) {
  const SymMatrix d = extremal_matrix(ExtremalParams::min_degree(static_cast<int>(state.range(0)), 1, 3),
                                      MatrixKind::distance);
  for (auto _ : state) benchmark::DoNotOptimize(largest_eigenvalue(d));
}
BENCHMARK(BM_DistanceRadiusBlocks)->Arg(64)->Arg(128)->Arg(256);

static void BM_ClosedFormRoot(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(largest_real_root(closed_form(Family::phi_b3_case1, {90, 2, 0, 7})));
  }
}
BENCHMARK(BM_ClosedFormRoot);

static void BM_LemmaOracle(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const Graph g = extremal_graph(ExtremalParams(2 * s + 4, 1, s));
  for (auto _ : state) benchmark::DoNotOptimize(is_fext_lemma(g, 1));
}
BENCHMARK(BM_LemmaOracle)->Arg(4)->Arg(8)->Arg(12);

static void BM_DefinitionalOracle(benchmark::State& state) {
  const Graph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_fext_definitional(g, 2));
}
BENCHMARK(BM_DefinitionalOracle)->Arg(8)->Arg(12);

static void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = extremal_graph(ExtremalParams(static_cast<int>(state.range(0)), 1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(16)->Arg(40);

static void BM_EnumerateConnected(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs(static_cast<int>(state.range(0)), true));
}
BENCHMARK(BM_EnumerateConnected)->Arg(6)->Arg(7);

BENCHMARK_MAIN();
