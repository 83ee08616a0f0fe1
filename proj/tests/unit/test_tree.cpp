#include <algorithm>
#include <utility>
#include <vector>

#include "doctest.h"
#include "mwbis/gen.hpp"
#include "mwbis/instance.hpp"
#include "mwbis/oracle.hpp"
#include "mwbis/tree.hpp"

namespace {

using namespace mwbis;

using Edge = std::pair<VertexId, VertexId>;

Instance path3_instance() {
  std::vector<Edge> edges{{0, 1}, {1, 2}};
  return make_instance(3, edges, {5000, 4000, 5000}, {2, 3, 2}, 4);
}

Instance star_instance(int leaves, Weight center_w, Budget center_b,
                       Weight leaf_w, Budget leaf_b, Budget B) {
  std::vector<Edge> edges;
  std::vector<Weight> weight{center_w};
  std::vector<Budget> budget{center_b};
  for (int v = 1; v <= leaves; ++v) {
    edges.emplace_back(0, v);
    weight.push_back(leaf_w);
    budget.push_back(leaf_b);
  }
  return make_instance(leaves + 1, edges, std::move(weight),
                       std::move(budget), B);
}

Instance cycle_instance(std::vector<Weight> weight, std::vector<Budget> budget,
                        Budget B) {
  const auto n = static_cast<std::int32_t>(weight.size());
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return make_instance(n, edges, std::move(weight), std::move(budget), B);
}

TEST_CASE("make_rooted_tree orients parents away from the root") {
  const RootedTree tree = make_rooted_tree(path3_instance(), 2);
  CHECK(tree.root == 2);
  CHECK(tree.parent[2] == -1);
  CHECK(tree.parent[1] == 2);
  CHECK(tree.parent[0] == 1);
  CHECK(tree.children[2] == std::vector<VertexId>{1});
  CHECK(tree.children[1] == std::vector<VertexId>{0});
  CHECK(tree.children[0].empty());
  REQUIRE(tree.postorder.size() == 3);
  CHECK(tree.postorder.back() == 2);
}

TEST_CASE("make_rooted_tree rejects cycles and forests") {
  const Instance cyc = cycle_instance({0, 0, 0}, {1, 1, 1}, 0);
  try {
    make_rooted_tree(cyc);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ErrorCode::NotATree);
  }
  const Instance split = make_instance(2, {}, {0, 0}, {1, 1}, 0);
  CHECK_THROWS_AS(make_rooted_tree(split), ValidationError);
}

TEST_CASE("make_rooted_tree postorder lists descendants first") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<std::int32_t>(rng.range(1, 12));
    const RootedTree tree = make_rooted_tree(gen_tree(rng, n, 9, 4, 10));
    REQUIRE(tree.postorder.size() == static_cast<std::size_t>(n));
    std::vector<int> seen_at(static_cast<std::size_t>(n), -1);
    for (int pos = 0; pos < n; ++pos)
      seen_at[static_cast<std::size_t>(tree.postorder[static_cast<std::size_t>(pos)])] = pos;
    for (VertexId v = 0; v < n; ++v) {
      REQUIRE(seen_at[static_cast<std::size_t>(v)] >= 0);
      if (tree.parent[static_cast<std::size_t>(v)] >= 0) {
        const auto p = static_cast<std::size_t>(tree.parent[static_cast<std::size_t>(v)]);
        CHECK(seen_at[static_cast<std::size_t>(v)] < seen_at[p]);
        const auto& siblings = tree.children[p];
        CHECK(std::binary_search(siblings.begin(), siblings.end(), v));
      }
    }
    CHECK(tree.postorder.back() == tree.root);
  }
}

TEST_CASE("leaf cells flip at the leaf's own budget") {
  const Instance leaf = make_instance(1, {}, {7000}, {3}, 3);
  const RootedTree tree = make_rooted_tree(leaf);
  const TreeTable D = fill_table(tree, 3);
  CHECK(D.cells[0][2].w == 0);
  CHECK_FALSE(D.cells[0][2].include);
  CHECK(D.cells[0][3].w == 7000);
  CHECK(D.cells[0][3].include);
}

TEST_CASE("star center cell prefers two leaves over the center") {
  const Instance star = star_instance(3, 1000, 1, 1000, 2, 5);
  const RootedTree tree = make_rooted_tree(star, 0);
  const TreeTable D = fill_table(tree, 5);
  const TreeCell& cell = D.cells[0][5];
  CHECK(cell.w == 2000);
  CHECK_FALSE(cell.include);
  Budget granted = 0;
  for (const auto& [child, grant] : cell.split) {
    CHECK(std::binary_search(tree.children[0].begin(), tree.children[0].end(), child));
    granted += grant;
  }
  CHECK(granted <= 5);
}

TEST_CASE("path cell at the root includes and grants the grandchild") {
  const RootedTree tree = make_rooted_tree(path3_instance(), 2);
  const TreeTable D = fill_table(tree, 4);
  const TreeCell& cell = D.cells[2][4];
  CHECK(cell.w == 10000);
  CHECK(cell.include);
  REQUIRE(cell.split.size() == 1);
  CHECK(cell.split[0] == std::pair<VertexId, Budget>{0, 2});
  CHECK(compute_budgeted_ind_set(D, 2, 4) == std::vector<VertexId>{0, 2});
}

TEST_CASE("retrieval at budget zero is empty") {
  const RootedTree tree = make_rooted_tree(path3_instance(), 2);
  const TreeTable D = fill_table(tree, 4);
  CHECK(compute_budgeted_ind_set(D, 2, 0).empty());
  CHECK(compute_budgeted_ind_set(D, 0, 2) == std::vector<VertexId>{0});
}

TEST_CASE("solve_tree on a single vertex") {
  const Instance lone = make_instance(1, {}, {9000}, {1}, 1);
  const Solution s = solve_tree(lone);
  CHECK(s.vertices == std::vector<VertexId>{0});
  CHECK(s.total_weight == 9000);
}

TEST_CASE("solve_tree takes all leaves of the tight star") {
  const Instance star = star_instance(3, 1000, 1, 1000, 2, 6);
  const Solution s = solve_tree(star);
  CHECK(s.vertices == std::vector<VertexId>{1, 2, 3});
  CHECK(s.total_weight == 3000);
}

TEST_CASE("solve_tree matches the oracle on random trees") {
  Rng rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::int32_t>(rng.range(1, 12));
    const Instance inst = gen_tree(rng, n, 20, 5, rng.range(0, 15));
    const Solution got = solve_tree(inst);
    const Solution want = brute_force_mwbis(inst);
    CHECK(got.total_weight == want.total_weight);
    CHECK(is_feasible(inst, got));
  }
}

TEST_CASE("tree table rows are monotone and splits stay within budget") {
  Rng rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    const auto n = static_cast<std::int32_t>(rng.range(1, 10));
    const Budget B = rng.range(0, 12);
    const RootedTree tree = make_rooted_tree(gen_tree(rng, n, 9, 4, B));
    const TreeTable D = fill_table(tree, B);
    for (VertexId i = 0; i < n; ++i) {
      const auto& row = D.cells[static_cast<std::size_t>(i)];
      for (Budget j = 0; j <= B; ++j) {
        const TreeCell& cell = row[static_cast<std::size_t>(j)];
        if (j > 0) CHECK(cell.w >= row[static_cast<std::size_t>(j - 1)].w);
        if (cell.include) CHECK(j >= tree.instance.budget[static_cast<std::size_t>(i)]);
        Budget granted = cell.include ? tree.instance.budget[static_cast<std::size_t>(i)] : 0;
        for (const auto& [child, grant] : cell.split) {
          CHECK(grant > 0);
          const VertexId owner = cell.include
                                     ? tree.parent[static_cast<std::size_t>(child)]
                                     : child;
          CHECK(tree.parent[static_cast<std::size_t>(owner)] == i);
          granted += grant;
        }
        CHECK(granted <= j);
      }
    }
  }
}

TEST_CASE("tree_profile matches the root row") {
  Rng rng(24);
  const Instance inst = gen_tree(rng, 8, 9, 4, 10);
  const RootedTree tree = make_rooted_tree(inst);
  const ValueProfile profile = tree_profile(tree, 10);
  const TreeTable D = fill_table(tree, 10);
  REQUIRE(profile.values.size() == 11);
  for (Budget j = 0; j <= 10; ++j)
    CHECK(profile.values[static_cast<std::size_t>(j)] ==
          D.cells[static_cast<std::size_t>(tree.root)][static_cast<std::size_t>(j)].w);
  CHECK_FALSE(profile.monotonized);
}

TEST_CASE("fill_table refuses oversized tables") {
  const Instance pair = make_instance(2, std::vector<Edge>{{0, 1}},
                                      {1000, 1000}, {1, 1}, 50'000'000);
  const RootedTree tree = make_rooted_tree(pair);
  try {
    fill_table(tree, pair.B);
    FAIL("expected SolverError");
  } catch (const SolverError& e) {
    CHECK(e.code() == ErrorCode::BudgetGuardExceeded);
  }
}

TEST_CASE("solve_forest handles isolated vertices") {
  const Instance two = make_instance(2, {}, {3000, 4000}, {2, 2}, 2);
  const Solution s = solve_forest(two);
  CHECK(s.vertices == std::vector<VertexId>{1});
  CHECK(s.total_weight == 4000);
}

TEST_CASE("solve_forest on one tree equals solve_tree") {
  Rng rng(25);
  const Instance inst = gen_tree(rng, 9, 15, 4, 8);
  CHECK(solve_forest(inst) == solve_tree(inst));
}

TEST_CASE("solve_forest takes one vertex per unit path") {
  std::vector<Edge> edges{{0, 1}, {2, 3}};
  const Instance inst = make_instance(
      4, edges, {1000, 1000, 1000, 1000}, {1, 1, 1, 1}, 2);
  const Solution s = solve_forest(inst);
  CHECK(s.total_weight == 2000);
  CHECK(is_feasible(inst, s));
}

TEST_CASE("solve_forest matches the oracle on random forests") {
  Rng rng(26);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::int32_t>(rng.range(3, 12));
    const auto trees = static_cast<std::int32_t>(rng.range(1, 3));
    const Instance inst = gen_forest(rng, n, trees, 20, 5, rng.range(0, 15));
    const Solution got = solve_forest(inst);
    const Solution want = brute_force_mwbis(inst);
    CHECK(got.total_weight == want.total_weight);
    CHECK(is_feasible(inst, got));
  }
}

TEST_CASE("solve_forest_parts reports a consistent allocation") {
  Rng rng(27);
  const Instance inst = gen_forest(rng, 10, 3, 9, 4, 9);
  std::vector<RootedTree> trees;
  for (const auto& comp : connected_components(inst)) {
    Instance sub = induced_subgraph(inst, comp);
    sub.B = inst.B;
    trees.push_back(make_rooted_tree(std::move(sub)));
  }
  const ForestParts parts = solve_forest_parts(trees, inst.B);
  REQUIRE(parts.per_tree.size() == trees.size());
  REQUIRE(parts.allocation.size() == trees.size());
  Weight weight_sum = 0;
  Budget budget_sum = 0;
  Budget granted = 0;
  for (std::size_t t = 0; t < trees.size(); ++t) {
    CHECK(parts.per_tree[t].total_budget <= parts.allocation[t]);
    weight_sum += parts.per_tree[t].total_weight;
    budget_sum += parts.per_tree[t].total_budget;
    granted += parts.allocation[t];
  }
  CHECK(parts.total_weight == weight_sum);
  CHECK(parts.total_budget == budget_sum);
  CHECK(granted <= inst.B);
}

TEST_CASE("solve_cycle alternates around C4") {
  const Instance c4 = cycle_instance({3000, 5000, 3000, 5000}, {1, 1, 1, 1}, 2);
  const Solution s = solve_cycle(c4, 2);
  CHECK(s.vertices == std::vector<VertexId>{1, 3});
  CHECK(s.total_weight == 10000);
}

TEST_CASE("solve_cycle takes one vertex of a triangle") {
  const Instance c3 = cycle_instance({1000, 1000, 1000}, {1, 1, 1}, 3);
  CHECK(solve_cycle(c3, 3).total_weight == 1000);
}

TEST_CASE("solve_cycle fits two vertices into C5") {
  const Instance c5 =
      cycle_instance({2000, 2000, 2000, 2000, 2000}, {1, 1, 1, 1, 1}, 2);
  CHECK(solve_cycle(c5, 2).total_weight == 4000);
}

TEST_CASE("solve_cycle rejects non-cycles") {
  const Instance path = path3_instance();
  try {
    solve_cycle(path, 4);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ErrorCode::NotACycle);
  }
  std::vector<Edge> chord{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}};
  const Instance chorded = make_instance(
      4, chord, {0, 0, 0, 0}, {1, 1, 1, 1}, 1);
  CHECK_THROWS_AS(solve_cycle(chorded, 1), ValidationError);
}

TEST_CASE("solve_cycle matches the oracle on random cycles") {
  Rng rng(28);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::int32_t>(rng.range(3, 12));
    const Instance inst = gen_cycle(rng, n, 20, 5, rng.range(0, 15));
    const Solution got = solve_cycle(inst, inst.B);
    const Solution want = brute_force_mwbis(inst);
    CHECK(got.total_weight == want.total_weight);
    CHECK(is_feasible(inst, got));
  }
}

}  // namespace
