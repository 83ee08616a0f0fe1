#include <benchmark/benchmark.h>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "mwbis/alloc.hpp"
#include "mwbis/gen.hpp"
#include "mwbis/greedy.hpp"
#include "mwbis/instance.hpp"
#include "mwbis/interval.hpp"
#include "mwbis/io.hpp"
#include "mwbis/planar.hpp"
#include "mwbis/reductions.hpp"
#include "mwbis/tree.hpp"

namespace {

using namespace mwbis;

std::vector<ValueProfile> random_profiles(Rng& rng, int k, Budget p) {
  std::vector<ValueProfile> profiles;
  for (int j = 0; j < k; ++j) {
    std::vector<Weight> raw(static_cast<std::size_t>(p) + 1, 0);
    Weight running = 0;
    for (auto& x : raw) {
      running += 1000 * rng.range(0, 4);
      x = running;
    }
    profiles.push_back(make_profile(std::move(raw)));
  }
  return profiles;
}

void BM_alloc(benchmark::State& state) {
  Rng rng(7);
  const auto k = static_cast<int>(state.range(0));
  const auto p = static_cast<Budget>(state.range(1));
  const auto profiles = random_profiles(rng, k, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(alloc(profiles, p));
  }
}
BENCHMARK(BM_alloc)->Args({4, 64})->Args({8, 128})->Args({16, 256});

void BM_solve_tree(benchmark::State& state) {
  Rng rng(11);
  const auto n = static_cast<std::int32_t>(state.range(0));
  const auto B = static_cast<Budget>(state.range(1));
  const RootedTree tree = make_rooted_tree(gen_tree(rng, n, 20, 5, B));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_tree(tree));
  }
}
BENCHMARK(BM_solve_tree)->Args({100, 25})->Args({200, 50})->Args({200, 100});

void BM_solve_intervals(benchmark::State& state) {
  Rng rng(13);
  const auto n = static_cast<std::int32_t>(state.range(0));
  const IntervalSet iset =
      gen_intervals(rng, n, 4 * static_cast<std::int64_t>(n), 20, 5, 100);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_intervals(iset));
  }
}
BENCHMARK(BM_solve_intervals)->Arg(100)->Arg(1000)->Arg(10000);

void BM_mbf(benchmark::State& state) {
  Rng rng(17);
  const auto n = static_cast<std::int32_t>(state.range(0));
  const Instance inst = gen_graph(rng, n, 100, 20, 5, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mbf(inst));
  }
}
BENCHMARK(BM_mbf)->Arg(100)->Arg(1000);

void BM_solve_band(benchmark::State& state) {
  Rng rng(19);
  const auto q = static_cast<std::int32_t>(state.range(0));
  const auto B = static_cast<Budget>(state.range(1));
  const LeveledPlanarInstance lp =
      gen_simply_nested(rng, {q, q, q}, 800, 20, 5, B);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_band(lp, B));
  }
}
BENCHMARK(BM_solve_band)->Args({8, 20})->Args({16, 40});

void BM_knapsack_star(benchmark::State& state) {
  Rng rng(23);
  const auto n = static_cast<std::int32_t>(state.range(0));
  const KnapsackInstance kp = gen_knapsack(rng, n, 100, 20, 10);
  const RootedTree star = knapsack_to_star(kp);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_tree(star));
  }
}
BENCHMARK(BM_knapsack_star)->Arg(50)->Arg(100);

void BM_parse_graph(benchmark::State& state) {
  Rng rng(29);
  const auto n = static_cast<std::int32_t>(state.range(0));
  const Instance inst = gen_graph(rng, n, 100, 20, 5, n);
  std::ostringstream text;
  write_graph(text, inst);
  const std::string file = text.str();
  for (auto _ : state) {
    std::istringstream in(file);
    benchmark::DoNotOptimize(parse_graph(in));
  }
}
BENCHMARK(BM_parse_graph)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
