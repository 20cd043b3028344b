#include <benchmark/benchmark.h>

#include "coverq/cover_ideal.hpp"
#include "coverq/linear_quotients.hpp"
#include "coverq/power.hpp"
#include "coverq/rooted_list.hpp"

using namespace coverq;

static void BM_RootedListPath(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rooted_list_path(n));
}
BENCHMARK(BM_RootedListPath)->DenseRange(10, 25, 5);

static void BM_MinimalCoversPath(benchmark::State& state) {
  const auto g = path_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_vertex_covers(g));
}
BENCHMARK(BM_MinimalCoversPath)->DenseRange(10, 20, 5);

static void BM_SecondPowerPath(benchmark::State& state) {
  const auto rl = rooted_list_path(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(power(rl, 2));
  state.counters["generators"] = static_cast<double>(rl.size());
}
BENCHMARK(BM_SecondPowerPath)->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);

// The full check behind the second-power suite: power, rooted order and colons.
static void BM_SecondPowerQuotients(benchmark::State& state) {
  const auto rl = rooted_list_path(static_cast<std::size_t>(state.range(0)));
  const auto sq = power(rl, 2);
  const auto gens = sq.minimal_generators();
  for (auto _ : state) benchmark::DoNotOptimize(check_linear_quotients(gens).passed);
  state.counters["minimal"] = static_cast<double>(gens.size());
}
BENCHMARK(BM_SecondPowerQuotients)->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);

static void BM_RootedListChordal(benchmark::State& state) {
  const auto g = random_chordal(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(rooted_list_chordal(g, PivotStrategy::lowest()));
}
BENCHMARK(BM_RootedListChordal)->Arg(8)->Arg(16)->Arg(32);

BENCHMARK_MAIN();
