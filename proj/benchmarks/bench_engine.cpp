#include <benchmark/benchmark.h>

#include "contam/engine.hpp"
#include "contam/strategies.hpp"

namespace {

void step_world(benchmark::State& state, const char* strategy) {
  const contam::WorldConfig cfg;
  const auto s = contam::make_strategy(strategy, cfg);
  const int n = static_cast<int>(state.range(0));
  contam::Rng rng(3);
  auto agents = contam::random_placement(n, n, cfg, rng);
  for (auto _ : state) {
    state.PauseTiming();
    contam::World world(cfg, agents, *s, *s, 5);
    state.ResumeTiming();
    for (int i = 0; i < 20; ++i) world.step();
  }
  state.SetItemsProcessed(state.iterations() * 20);
}

void BM_StepCircle(benchmark::State& state) { step_world(state, "circle"); }
void BM_StepPotential(benchmark::State& state) { step_world(state, "potential"); }
void BM_StepRandom(benchmark::State& state) { step_world(state, "random"); }
BENCHMARK(BM_StepCircle)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StepPotential)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StepRandom)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_FullGame(benchmark::State& state) {
  const contam::WorldConfig cfg;
  const auto circle = contam::make_strategy("circle", cfg);
  const auto potential = contam::make_strategy("potential", cfg);
  contam::InitialState init;
  init.n_healthy = init.n_contaminated = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(contam::run_game(cfg, *circle, *potential, init, seed++));
}
BENCHMARK(BM_FullGame)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace
