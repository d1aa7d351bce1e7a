#include <benchmark/benchmark.h>

#include <map>
#include <utility>

#include "implicit_net/bipartite.hpp"
#include "implicit_net/connectivity.hpp"
#include "implicit_net/projection.hpp"
#include "implicit_net/synthetic.hpp"

namespace {

using namespace implicit_net;

// Synthetic power-law rating data, cached per (users, skew x 10).
const BipartiteRatingGraph& dataset(std::int64_t users, std::int64_t skew_tenths) {
  static std::map<std::pair<std::int64_t, std::int64_t>, BipartiteRatingGraph> cache;
  auto key = std::make_pair(users, skew_tenths);
  auto it = cache.find(key);
  if (it == cache.end()) {
    SyntheticSpec spec{static_cast<std::size_t>(users), static_cast<std::size_t>(users),
                       static_cast<std::size_t>(users) * 10, skew_tenths / 10.0};
    auto triples = generate_synthetic(spec, 42);
    it = cache.emplace(key, BipartiteRatingGraph::from_triples(triples)).first;
  }
  return it->second;
}

void set_counters(benchmark::State& state, const BipartiteRatingGraph& g) {
  state.counters["users"] = static_cast<double>(g.num_users());
  state.counters["ratings"] = static_cast<double>(g.num_edges());
}

void BM_Exhaustive(benchmark::State& state) {
  const auto& g = dataset(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(project_exhaustive(g));
  set_counters(state, g);
}

void BM_CliqueAddition(benchmark::State& state) {
  const auto& g = dataset(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(project_clique_addition(g));
  set_counters(state, g);
}

void BM_MatrixProduct(benchmark::State& state) {
  const auto& g = dataset(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(project_matmul(g));
  set_counters(state, g);
}

void BM_TwoPathCounts(benchmark::State& state) {
  const auto& g = dataset(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(two_path_counts(g));
  set_counters(state, g);
}

void BM_DesignSequential(benchmark::State& state) {
  const auto& g = dataset(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(design_sequential(g));
  set_counters(state, g);
}

void BM_DesignConcurrent(benchmark::State& state) {
  const auto& g = dataset(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(design_concurrent(g));
  set_counters(state, g);
}

void BM_BfsComponents(benchmark::State& state) {
  const auto& g = dataset(state.range(0), state.range(1));
  UserNetwork net = project_clique_addition(g);
  for (auto _ : state) benchmark::DoNotOptimize(bfs_components(net));
  state.counters["edges"] = static_cast<double>(net.num_edges());
}

}  // namespace

BENCHMARK(BM_Exhaustive)->Args({1000, 6})->Args({5000, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CliqueAddition)->ArgsProduct({{1000, 5000}, {5, 6, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatrixProduct)->ArgsProduct({{1000, 5000}, {5, 6, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TwoPathCounts)->ArgsProduct({{1000, 5000}, {6}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DesignSequential)->ArgsProduct({{1000, 5000}, {5, 6, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DesignConcurrent)->ArgsProduct({{1000, 5000}, {5, 6, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BfsComponents)->ArgsProduct({{1000, 5000}, {5, 6, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
