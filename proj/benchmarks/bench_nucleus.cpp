#include <benchmark/benchmark.h>

#include "nucleus/corpus.hpp"
#include "nucleus/homology.hpp"
#include "nucleus/morse.hpp"
#include "nucleus/nuclei.hpp"

using namespace nucleus;

namespace {

// complete graph on n vertices; n = 5 gives 10 edges
Graph complete(int n) {
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.push_back({a, b});
  return Graph(n, e);
}

Graph wheel(int spokes) {
  std::vector<Edge> e;
  for (int i = 1; i <= spokes; ++i) e.push_back({0, i});
  for (int i = 1; i <= spokes; ++i) e.push_back({i, i % spokes + 1});
  return Graph(spokes + 1, e);
}

}  // namespace

static void BM_EnumerateNuclei(benchmark::State& state) {
  const Graph g = wheel(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_nuclei(g));
  state.counters["edges"] = g.edge_count();
}
BENCHMARK(BM_EnumerateNuclei)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_ShadeComplex(benchmark::State& state) {
  const Graph g = wheel(static_cast<int>(state.range(0)));
  const VertexSet u = VertexSet::of({1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(a_complex(g, u));
}
BENCHMARK(BM_ShadeComplex)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_ReducedBetti(benchmark::State& state) {
  const Graph g = wheel(static_cast<int>(state.range(0)));
  const SimplicialComplex k = nucleus_complex(g, VertexSet::of({1, 2}));
  for (auto _ : state) benchmark::DoNotOptimize(reduced_betti(k, std::size_t{1} << 20));
  state.counters["faces"] = static_cast<double>(k.face_count());
}
BENCHMARK(BM_ReducedBetti)->DenseRange(4, 6, 1)->Unit(benchmark::kMillisecond);

static void BM_ElserViaEuler(benchmark::State& state) {
  const Graph g = complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(elser_via_euler(g, 3));
}
BENCHMARK(BM_ElserViaEuler)->DenseRange(4, 5, 1)->Unit(benchmark::kMillisecond);

static void BM_ExtendMatching(benchmark::State& state) {
  const Graph g = wheel(static_cast<int>(state.range(0)));
  const int u[] = {1, 3};
  for (auto _ : state) benchmark::DoNotOptimize(extend_matching(g, u, ConflictPolicy::kDefer));
}
BENCHMARK(BM_ExtendMatching)->DenseRange(4, 7, 1)->Unit(benchmark::kMillisecond);

static void BM_AcyclicityCheck(benchmark::State& state) {
  const Graph g = wheel(static_cast<int>(state.range(0)));
  const int u[] = {1, 3};
  const MorseRun run = extend_matching(g, u, ConflictPolicy::kDefer);
  for (auto _ : state) benchmark::DoNotOptimize(is_acyclic(run.matching));
  state.counters["faces"] = static_cast<double>(run.matching.domain.face_count());
}
BENCHMARK(BM_AcyclicityCheck)->DenseRange(4, 7, 1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
