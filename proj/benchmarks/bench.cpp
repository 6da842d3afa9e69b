#include <benchmark/benchmark.h>

#include "tperf/colouring.hpp"
#include "tperf/corpus.hpp"
#include "tperf/polytopes.hpp"
#include "tperf/ropes.hpp"
#include "tperf/tminors.hpp"

namespace {

using namespace tperf;

void BM_VertexEnumerationCycle(benchmark::State& state) {
  const HPolytope p = tstab(cycle(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_vertices(p));
}
BENCHMARK(BM_VertexEnumerationCycle)->DenseRange(5, 11, 2)->Unit(benchmark::kMillisecond);

void BM_TPerfectionOracle(benchmark::State& state) {
  const Graph g = make_named(state.range(0) == 0 ? "fig1a" : "fig1b");
  for (auto _ : state) benchmark::DoNotOptimize(is_t_perfect(g));
}
BENCHMARK(BM_TPerfectionOracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ChiExactMycielski(benchmark::State& state) {
  const Graph g = make_named("mycielski" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chi_exact(g));
}
BENCHMARK(BM_ChiExactMycielski)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_ChiFractional(benchmark::State& state) {
  const Graph g = state.range(0) == 0 ? petersen() : grotzsch();
  for (auto _ : state) benchmark::DoNotOptimize(chi_fractional(g));
}
BENCHMARK(BM_ChiFractional)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CertifyMoebius(benchmark::State& state) {
  const Graph g = moebius_ladder(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(certify(g));
}
BENCHMARK(BM_CertifyMoebius)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_VerifyRope(benchmark::State& state) {
  const auto gen = generate_rope(static_cast<int>(state.range(0)), 7, 8);
  for (auto _ : state) benchmark::DoNotOptimize(verify_rope(gen.graph, gen.rope));
}
BENCHMARK(BM_VerifyRope)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_FindOddWheel(benchmark::State& state) {
  const Graph g = wheel(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_odd_wheel_tminor(disjoint_union(g, cycle(9))));
}
BENCHMARK(BM_FindOddWheel)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
