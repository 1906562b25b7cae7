#include <benchmark/benchmark.h>

#include <numeric>

#include "contam/bounds.hpp"
#include "contam/wpc.hpp"

namespace {

std::vector<contam::IdPair> complete(int n) {
  std::vector<contam::IdPair> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  }
  return out;
}

void BM_WpcComplete(benchmark::State& state) {
  const auto comp = contam::abstract_component(complete(static_cast<int>(state.range(0))), true);
  for (auto _ : state) benchmark::DoNotOptimize(contam::wpc(comp));
}
BENCHMARK(BM_WpcComplete)->RangeMultiplier(2)->Range(8, 64);

void BM_BruteForce(benchmark::State& state) {
  const auto comp = contam::abstract_component(complete(static_cast<int>(state.range(0))), true);
  for (auto _ : state) benchmark::DoNotOptimize(contam::brute_force_min_conquer(comp));
}
BENCHMARK(BM_BruteForce)->DenseRange(4, 7);

void BM_DenseCircleWpc(benchmark::State& state) {
  const contam::WorldConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(contam::dense_circle_wpc(3.0, 37, cfg));
}
BENCHMARK(BM_DenseCircleWpc)->Unit(benchmark::kMillisecond);

}  // namespace
