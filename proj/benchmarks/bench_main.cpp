#include <benchmark/benchmark.h>

#include "frank/certificate.hpp"
#include "frank/connectivity.hpp"
#include "frank/group_flow.hpp"
#include "frank/oracle.hpp"
#include "frank/random_graph.hpp"

namespace {

frank::Graph petersen() {
  std::vector<frank::Edge> edges;
  for (frank::Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return frank::Graph(10, edges);
}

void BM_Certify(benchmark::State& state) {
  const auto g = frank::random_cubic_3ec(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(frank::build_certificate(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Certify)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_JaegerFlow(benchmark::State& state) {
  const auto g = frank::random_cubic_3ec(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(frank::jaeger_flow(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_JaegerFlow)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_EdgeConnectivity(benchmark::State& state) {
  const auto g = frank::random_cubic_3ec(static_cast<std::size_t>(state.range(0)), 13);
  for (auto _ : state) benchmark::DoNotOptimize(frank::edge_connectivity(g));
}
BENCHMARK(BM_EdgeConnectivity)->RangeMultiplier(4)->Range(16, 1024);

void BM_FrankNumberPetersen(benchmark::State& state) {
  const auto g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(frank::frank_number(g));
}
BENCHMARK(BM_FrankNumberPetersen)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
