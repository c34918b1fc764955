#include <benchmark/benchmark.h>

#include "graphprof/classes.hpp"
#include "graphprof/constructions.hpp"
#include "graphprof/enumeration.hpp"
#include "graphprof/extremal.hpp"
#include "graphprof/profiles.hpp"

using namespace graphprof;

static void BM_triangle_count(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = random_graph(n, 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(triangle_count(g));
  state.SetComplexityN(n);
}
BENCHMARK(BM_triangle_count)->Arg(256)->Arg(512)->Arg(1024)->Arg(2048)->Complexity();

static void BM_profile3(benchmark::State& state) {
  Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(profile3_graph(g).counts[3]);
}
BENCHMARK(BM_profile3)->Arg(512)->Arg(2048);

static void BM_profile4_circular(benchmark::State& state) {
  Tournament t = circular_tournament(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(profile4_tournament(t).c4);
}
BENCHMARK(BM_profile4_circular)->Arg(101)->Arg(501)->Arg(1001);

static void BM_profile4_random(benchmark::State& state) {
  Tournament t = random_tournament(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(profile4_tournament(t).t4);
}
BENCHMARK(BM_profile4_random)->Arg(501)->Arg(1001);

static void BM_exhaustive_profile4(benchmark::State& state) {
  Tournament t = random_tournament(static_cast<int>(state.range(0)), 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(profile_exhaustive(t, 4).total);
}
BENCHMARK(BM_exhaustive_profile4)->Arg(30)->Arg(40)->Arg(60);

static void BM_canonical_code_l5(benchmark::State& state) {
  std::uint64_t x = 0;
  std::uint32_t raw = 0;
  for (auto _ : state) {
    raw = (raw + 0x9e5) & 1023;
    benchmark::DoNotOptimize(canonical_code(Kind::graph, 5, raw));
    x += raw;
  }
  benchmark::DoNotOptimize(x);
}
BENCHMARK(BM_canonical_code_l5);

static void BM_grid_search(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(grid_search_min(2, 0.01, 0.02).value);
}
BENCHMARK(BM_grid_search)->Unit(benchmark::kMillisecond);

static void BM_count_k_cliques(benchmark::State& state) {
  Graph g = random_graph(200, 0.5, 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        count_k_cliques(g, static_cast<int>(state.range(0)), 8'000'000'000ull));
}
BENCHMARK(BM_count_k_cliques)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
