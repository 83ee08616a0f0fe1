#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mwbis/instance.hpp"
#include "mwbis/interval.hpp"
#include "mwbis/planar.hpp"
#include "mwbis/reductions.hpp"

namespace mwbis {

// Deterministic draw source; a fixed seed replays the identical stream on
// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform over [0, n); n >= 1. Rejection keeps the distribution exact.
  std::uint64_t bounded(std::uint64_t n);

  // Uniform over [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

// Random families. Weights are whole units stored in milli-units (multiples
// of 1000) drawn from [0, wmax_units]; vertex budgets are drawn from
// [1, bmax]. The tree family roots at vertex 0.
Instance gen_tree(Rng& rng, std::int32_t n, Weight wmax_units, Budget bmax,
                  Budget B);
Instance gen_forest(Rng& rng, std::int32_t n, std::int32_t trees,
                    Weight wmax_units, Budget bmax, Budget B);
Instance gen_cycle(Rng& rng, std::int32_t n, Weight wmax_units, Budget bmax,
                   Budget B);
Instance gen_graph(Rng& rng, std::int32_t n, int edge_permille,
                   Weight wmax_units, Budget bmax, Budget B);
IntervalSet gen_intervals(Rng& rng, std::int32_t n, std::int64_t span,
                          Weight wmax_units, Budget bmax, Budget B);

// Random graph repaired until no vertex has d+1 pairwise non-adjacent
// neighbors; each repair step joins two offending neighbors. The repair
// search is exponential in vertex degree, so n is capped at 30.
Instance gen_claw_free(Rng& rng, std::int32_t n, int d, int edge_permille,
                       Weight wmax_units, Budget bmax, Budget B);

// Star with d leaves where the cheap unit-weight center blocks every leaf:
// the budget-first scan keeps one vertex while the optimum takes all d.
// Center budget 1, leaf budgets 2, B = 2d, all weights one unit.
Instance gen_mbf_tight(int d);

// Star whose center wins the weight-per-budget order yet is worth one unit;
// the optimum takes the d leaves worth M units total. Center budget 1, leaf
// budgets M, B = dM. Requires d >= 2 and d | 1000*M so leaf weights are
// integral milli-units.
Instance gen_mwbrf_bad(int d, std::int64_t M);

// Nested cycles with non-crossing spokes between consecutive levels built
// by a randomized monotone merge walk. sizes lists cycle lengths from the
// outermost level inward, each >= 3. spoke_permille in [1, 1000] thins the
// walk; at least one spoke per consecutive pair always survives.
LeveledPlanarInstance gen_simply_nested(Rng& rng,
                                        const std::vector<std::int32_t>& sizes,
                                        int spoke_permille, Weight wmax_units,
                                        Budget bmax, Budget B);

// Item values are whole units in milli-units from [0, vmax_units]; sizes
// are drawn from [1, smax].
KnapsackInstance gen_knapsack(Rng& rng, std::int32_t n, std::int64_t capacity,
                              std::int64_t vmax_units, std::int64_t smax);

}  // namespace mwbis
