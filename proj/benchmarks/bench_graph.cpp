#include <benchmark/benchmark.h>

#include "contam/engine.hpp"
#include "contam/swarm_graph.hpp"

namespace {

std::vector<contam::AgentSnapshot> placement(int per_side) {
  contam::Rng rng(17);
  return contam::random_placement(per_side, per_side, contam::WorldConfig{}, rng);
}

void BM_ObservationGraph(benchmark::State& state) {
  const auto agents = placement(static_cast<int>(state.range(0)));
  const contam::WorldConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(contam::build_observation_graph(agents, cfg));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ObservationGraph)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_Components(benchmark::State& state) {
  const auto agents = placement(static_cast<int>(state.range(0)));
  const auto graph = contam::build_observation_graph(agents, contam::WorldConfig{});
  for (auto _ : state) benchmark::DoNotOptimize(contam::connected_components(graph, agents));
}
BENCHMARK(BM_Components)->RangeMultiplier(2)->Range(16, 128);

void BM_Fence(benchmark::State& state) {
  const auto agents = placement(static_cast<int>(state.range(0)));
  const contam::WorldConfig cfg;
  const auto cg = contam::connected_components(contam::build_observation_graph(agents, cfg), agents);
  for (auto _ : state) {
    for (const auto& comp : cg.components) benchmark::DoNotOptimize(contam::fence(comp, agents, cfg));
  }
}
BENCHMARK(BM_Fence)->Arg(32)->Arg(64);

}  // namespace
