#include <benchmark/benchmark.h>

#include "matroidfix/builders.hpp"
#include "matroidfix/engine.hpp"
#include "matroidfix/symmetry.hpp"

namespace {

using namespace mfx;

void BM_AutomorphismsFano(benchmark::State& state) {
  const Matroid m = fano();
  for (auto _ : state) {
    benchmark::DoNotOptimize(automorphism_group(m).order());
  }
}
BENCHMARK(BM_AutomorphismsFano);

void BM_AutomorphismsVamos(benchmark::State& state) {
  const Matroid m = vamos();
  for (auto _ : state) {
    benchmark::DoNotOptimize(automorphism_group(m).order());
  }
}
BENCHMARK(BM_AutomorphismsVamos);

void BM_AutomorphismsPg32(benchmark::State& state) {
  const Matroid m = pg32();
  for (auto _ : state) {
    benchmark::DoNotOptimize(automorphism_group(m).order());
  }
}
BENCHMARK(BM_AutomorphismsPg32);

void BM_SpanningTreesK7(benchmark::State& state) {
  const Graph g = complete_graph(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cycle_matroid(g).bases().size());
  }
}
BENCHMARK(BM_SpanningTreesK7);

void BM_MinBasePg32(benchmark::State& state) {
  const PermGroup g = automorphism_group(pg32());
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_base(g).size);
  }
}
BENCHMARK(BM_MinBasePg32);

void BM_GraphAutDodecahedron(benchmark::State& state) {
  const Graph g = dodecahedron();
  for (auto _ : state) {
    benchmark::DoNotOptimize(graph_automorphisms(g).order());
  }
}
BENCHMARK(BM_GraphAutDodecahedron);

void BM_EdgeActionFixK6(benchmark::State& state) {
  const Graph g = complete_graph(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        analyze_graph(g, MatroidKind::Cycle, EngineMode::EdgeAction).report.fix);
  }
}
BENCHMARK(BM_EdgeActionFixK6);

}  // namespace

BENCHMARK_MAIN();
