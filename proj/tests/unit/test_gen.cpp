#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"
#include "mwbis/gen.hpp"
#include "mwbis/greedy.hpp"
#include "mwbis/instance.hpp"
#include "mwbis/interval.hpp"
#include "mwbis/oracle.hpp"
#include "mwbis/planar.hpp"
#include "mwbis/reductions.hpp"

namespace {

using namespace mwbis;

void check_units(const Instance& inst, Weight wmax_units, Budget bmax) {
  for (std::int32_t v = 0; v < inst.n; ++v) {
    const Weight w = inst.weight[static_cast<std::size_t>(v)];
    const Budget b = inst.budget[static_cast<std::size_t>(v)];
    CHECK(w % 1000 == 0);
    CHECK(w >= 0);
    CHECK(w <= 1000 * wmax_units);
    CHECK(b >= 1);
    CHECK(b <= bmax);
  }
}

TEST_CASE("Rng replays the same stream for the same seed") {
  Rng a(99);
  Rng b(99);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  CHECK(Rng(1).next() != Rng(2).next());
}

TEST_CASE("Rng bounded and range stay inside their intervals") {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    CHECK(rng.bounded(7) < 7);
    CHECK(rng.bounded(1) == 0);
    const std::int64_t r = rng.range(-3, 4);
    CHECK(r >= -3);
    CHECK(r <= 4);
    CHECK(rng.range(5, 5) == 5);
  }
  try {
    rng.bounded(0);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ErrorCode::BadParams);
  }
  try {
    rng.range(5, 4);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ErrorCode::BadParams);
  }
}

TEST_CASE("generators replay identically for the same seed") {
  Rng a(512);
  Rng b(512);
  CHECK(gen_tree(a, 9, 10, 4, 6) == gen_tree(b, 9, 10, 4, 6));
  CHECK(gen_forest(a, 9, 3, 10, 4, 6) == gen_forest(b, 9, 3, 10, 4, 6));
  CHECK(gen_cycle(a, 7, 10, 4, 6) == gen_cycle(b, 7, 10, 4, 6));
  CHECK(gen_graph(a, 8, 400, 10, 4, 6) == gen_graph(b, 8, 400, 10, 4, 6));
  CHECK(gen_intervals(a, 8, 30, 10, 4, 6) == gen_intervals(b, 8, 30, 10, 4, 6));
  CHECK(gen_claw_free(a, 10, 2, 300, 10, 4, 6) ==
        gen_claw_free(b, 10, 2, 300, 10, 4, 6));
  CHECK(gen_simply_nested(a, {4, 3}, 700, 10, 4, 6) ==
        gen_simply_nested(b, {4, 3}, 700, 10, 4, 6));
  CHECK(gen_knapsack(a, 8, 20, 10, 5) == gen_knapsack(b, 8, 20, 10, 5));
}

TEST_CASE("gen_tree builds a connected tree in range") {
  Rng rng(21);
  for (std::int32_t n : {1, 2, 7, 20}) {
    CAPTURE(n);
    const Instance inst = gen_tree(rng, n, 12, 5, 9);
    CHECK(inst.n == n);
    CHECK(inst.B == 9);
    CHECK(edge_list(inst).size() == static_cast<std::size_t>(n) - 1);
    CHECK(connected_components(inst).size() == 1);
    check_units(inst, 12, 5);
  }
}

TEST_CASE("gen_forest builds the requested number of trees") {
  Rng rng(22);
  for (std::int32_t trees : {1, 2, 5}) {
    CAPTURE(trees);
    const Instance inst = gen_forest(rng, 11, trees, 12, 5, 9);
    CHECK(inst.n == 11);
    CHECK(connected_components(inst).size() == static_cast<std::size_t>(trees));
    CHECK(edge_list(inst).size() == static_cast<std::size_t>(11 - trees));
    check_units(inst, 12, 5);
  }
}

TEST_CASE("gen_cycle builds a single cycle") {
  Rng rng(23);
  for (std::int32_t n : {3, 6, 13}) {
    CAPTURE(n);
    const Instance inst = gen_cycle(rng, n, 12, 5, 9);
    CHECK(edge_list(inst).size() == static_cast<std::size_t>(n));
    CHECK(connected_components(inst).size() == 1);
    for (std::int32_t v = 0; v < n; ++v) {
      CHECK(inst.adj[static_cast<std::size_t>(v)].size() == 2);
    }
    check_units(inst, 12, 5);
  }
}

TEST_CASE("gen_graph honors the edge density extremes") {
  Rng rng(24);
  const Instance sparse = gen_graph(rng, 9, 0, 12, 5, 9);
  CHECK(edge_list(sparse).empty());
  const Instance dense = gen_graph(rng, 9, 1000, 12, 5, 9);
  CHECK(edge_list(dense).size() == 9 * 8 / 2);
  check_units(dense, 12, 5);
}

TEST_CASE("gen_intervals stays inside the horizon") {
  Rng rng(25);
  const IntervalSet iset = gen_intervals(rng, 14, 40, 12, 5, 9);
  CHECK(iset.intervals.size() == 14);
  CHECK(iset.B == 9);
  std::set<VertexId> ids;
  for (const Interval& iv : iset.intervals) {
    CHECK(iv.start >= 0);
    CHECK(iv.start < iv.finish);
    CHECK(iv.finish <= 40);
    CHECK(iv.weight % 1000 == 0);
    CHECK(iv.weight <= 12000);
    CHECK(iv.budget >= 1);
    CHECK(iv.budget <= 5);
    ids.insert(iv.id);
  }
  CHECK(ids.size() == 14);
  CHECK(*ids.begin() == 0);
  CHECK(*ids.rbegin() == 13);
}

TEST_CASE("gen_claw_free passes the exact claw check") {
  Rng rng(26);
  for (int d : {2, 3}) {
    CAPTURE(d);
    for (int trial = 0; trial < 5; ++trial) {
      const Instance inst = gen_claw_free(rng, 12, d, 350, 12, 5, 9);
      CHECK(verify_claw_free(inst, d));
      check_units(inst, 12, 5);
    }
  }
}

TEST_CASE("gen_mbf_tight pits one pick against d leaves") {
  for (int d : {2, 4}) {
    CAPTURE(d);
    const Instance inst = gen_mbf_tight(d);
    REQUIRE(inst.n == d + 1);
    CHECK(inst.B == 2 * d);
    std::int32_t center = -1;
    for (std::int32_t v = 0; v <= d; ++v) {
      CHECK(inst.weight[static_cast<std::size_t>(v)] == 1000);
      if (inst.adj[static_cast<std::size_t>(v)].size() ==
          static_cast<std::size_t>(d)) {
        center = v;
      } else {
        CHECK(inst.adj[static_cast<std::size_t>(v)].size() == 1);
        CHECK(inst.budget[static_cast<std::size_t>(v)] == 2);
      }
    }
    REQUIRE(center >= 0);
    CHECK(inst.budget[static_cast<std::size_t>(center)] == 1);

    const GreedyTrace trace = mbf(inst);
    CHECK(trace.picks == std::vector<VertexId>{center});
    CHECK(brute_force_mwbis(inst).vertices.size() ==
          static_cast<std::size_t>(d));
  }
}

TEST_CASE("gen_mwbrf_bad makes the ratio-first scan lose a factor of M") {
  for (const auto& [d, M] : std::vector<std::pair<int, std::int64_t>>{
           {2, 4}, {4, 8}}) {
    CAPTURE(d);
    CAPTURE(M);
    const Instance inst = gen_mwbrf_bad(d, M);
    REQUIRE(inst.n == d + 1);
    CHECK(inst.B == static_cast<Budget>(d) * M);
    CHECK(inst.weight[0] == 1000);
    CHECK(inst.budget[0] == 1);
    for (std::int32_t v = 1; v <= d; ++v) {
      CHECK(inst.weight[static_cast<std::size_t>(v)] == 1000 * M / d);
      CHECK(inst.budget[static_cast<std::size_t>(v)] == M);
    }

    const std::vector<VertexId> picks = mwbrf(inst);
    CHECK(picks == std::vector<VertexId>{0});
    CHECK(brute_force_mwbis(inst).total_weight == 1000 * M);
  }
}

TEST_CASE("gen_simply_nested produces a valid leveled instance") {
  Rng rng(27);
  for (int trial = 0; trial < 10; ++trial) {
    CAPTURE(trial);
    const std::vector<std::int32_t> sizes{
        3 + static_cast<std::int32_t>(rng.bounded(4)),
        3 + static_cast<std::int32_t>(rng.bounded(4)),
        3 + static_cast<std::int32_t>(rng.bounded(4))};
    const int permille = 1 + static_cast<int>(rng.bounded(1000));
    const LeveledPlanarInstance lp =
        gen_simply_nested(rng, sizes, permille, 12, 5, 9);
    REQUIRE(lp.levels.size() == 3);
    for (std::size_t li = 0; li < 3; ++li) {
      CHECK(lp.levels[li].size() == static_cast<std::size_t>(sizes[li]));
    }
    check_units(lp.instance, 12, 5);
    CHECK(validate_leveled(lp.instance, lp.levels) == lp);

    for (std::size_t li = 0; li + 1 < 3; ++li) {
      int spokes = 0;
      for (const auto& [u, v] : edge_list(lp.instance)) {
        const auto lu = lp.level_of[static_cast<std::size_t>(u)];
        const auto lv = lp.level_of[static_cast<std::size_t>(v)];
        if (std::minmax(lu, lv) ==
            std::minmax<std::int32_t>(static_cast<std::int32_t>(li) + 1,
                                      static_cast<std::int32_t>(li) + 2)) {
          if (lu != lv) ++spokes;
        }
      }
      CHECK(spokes >= 1);
    }
  }
}

TEST_CASE("gen_knapsack stays inside its bounds") {
  Rng rng(28);
  const KnapsackInstance kp = gen_knapsack(rng, 15, 33, 12, 7);
  CHECK(kp.items.size() == 15);
  CHECK(kp.capacity == 33);
  for (const KnapsackItem& item : kp.items) {
    CHECK(item.value % 1000 == 0);
    CHECK(item.value >= 0);
    CHECK(item.value <= 12000);
    CHECK(item.size >= 1);
    CHECK(item.size <= 7);
  }
}

TEST_CASE("generators reject out-of-range parameters") {
  Rng rng(29);
  const auto bad = [&](auto&& call) {
    try {
      call();
      FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
      CHECK(e.code() == ErrorCode::BadParams);
    }
  };
  bad([&] { gen_tree(rng, 0, 10, 4, 6); });
  bad([&] { gen_tree(rng, 5, 10, 0, 6); });
  bad([&] { gen_tree(rng, 5, 10, 4, -1); });
  bad([&] { gen_tree(rng, 5, -1, 4, 6); });
  bad([&] { gen_forest(rng, 5, 0, 10, 4, 6); });
  bad([&] { gen_forest(rng, 5, 6, 10, 4, 6); });
  bad([&] { gen_cycle(rng, 2, 10, 4, 6); });
  bad([&] { gen_graph(rng, 5, 1001, 10, 4, 6); });
  bad([&] { gen_intervals(rng, 5, 0, 10, 4, 6); });
  bad([&] { gen_claw_free(rng, 31, 2, 300, 10, 4, 6); });
  bad([&] { gen_claw_free(rng, 10, 0, 300, 10, 4, 6); });
  bad([&] { gen_mbf_tight(1); });
  bad([&] { gen_mwbrf_bad(1, 2); });
  bad([&] { gen_mwbrf_bad(3, 1); });
  bad([&] { gen_simply_nested(rng, {}, 500, 10, 4, 6); });
  bad([&] { gen_simply_nested(rng, {2, 3}, 500, 10, 4, 6); });
  bad([&] { gen_simply_nested(rng, {3, 3}, 0, 10, 4, 6); });
  bad([&] { gen_knapsack(rng, -1, 20, 10, 5); });
  bad([&] { gen_knapsack(rng, 5, 20, 10, 0); });
}

}  // namespace
