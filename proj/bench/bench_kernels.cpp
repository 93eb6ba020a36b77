// Serial reference vs OpenMP kernels on uniform instances.

#include <benchmark/benchmark.h>

#include "relay/bruteforce.hpp"
#include "relay/geometry.hpp"
#include "relay/instances.hpp"
#include "relay/kernels.hpp"

namespace {

relay::Exec exec_of(const benchmark::State& st) {
  return st.range(1) == 0 ? relay::Exec::serial : relay::Exec::parallel;
}

void BM_CoverageSets(benchmark::State& st) {
  const auto inst = relay::gen_uniform(static_cast<int>(st.range(0)), 20.0, 2.0, 7);
  const auto cand = relay::candidate_points(inst.sensors, 1.0);
  std::vector<int> labels(inst.sensors.size());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i);
  for (auto _ : st) {
    benchmark::DoNotOptimize(
        relay::coverage_sets(cand, inst.sensors, labels, 1.0, {}, exec_of(st)));
  }
  st.counters["candidates"] = static_cast<double>(cand.size());
}

void BM_GroupClosestPairs(benchmark::State& st) {
  const auto inst = relay::gen_uniform(static_cast<int>(st.range(0)), 60.0, 2.0, 11);
  std::vector<int> groups(inst.sensors.size());
  for (std::size_t i = 0; i < groups.size(); ++i) groups[i] = static_cast<int>(i % 16);
  for (auto _ : st) {
    benchmark::DoNotOptimize(relay::group_closest_pairs(inst.sensors, groups, 16, exec_of(st)));
  }
}

void BM_MaxPairwise(benchmark::State& st) {
  const auto inst = relay::gen_uniform(static_cast<int>(st.range(0)), 100.0, 2.0, 3);
  for (auto _ : st) {
    benchmark::DoNotOptimize(relay::max_pairwise_distance(inst.sensors, exec_of(st)));
  }
}

void BM_BruteForce(benchmark::State& st) {
  relay::Instance inst;
  inst.r = 1.5;
  inst.sensors = {{0, 0}, {2.6, 0}, {5.2, 0.4}, {1.2, 2.7}};
  for (auto _ : st) {
    benchmark::DoNotOptimize(relay::optimum_bruteforce(inst, 4, relay::Tier::one, exec_of(st)));
  }
}

}  // namespace

BENCHMARK(BM_CoverageSets)->ArgsProduct({{200, 1000, 4000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GroupClosestPairs)->ArgsProduct({{500, 2000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaxPairwise)->ArgsProduct({{1000, 5000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForce)->ArgsProduct({{0}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
