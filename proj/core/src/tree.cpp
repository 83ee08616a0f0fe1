#include "mwbis/tree.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "mwbis/errors.hpp"

namespace mwbis {

namespace {

constexpr long long kCellGuard = 100'000'000;

ValueProfile row_profile(const TreeTable& D, VertexId v, Budget upto) {
  std::vector<Weight> values(static_cast<std::size_t>(upto) + 1);
  for (Budget t = 0; t <= upto; ++t) {
    values[static_cast<std::size_t>(t)] =
        D.cells[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)].w;
  }
  return make_profile(std::move(values));
}

}  // namespace

RootedTree make_rooted_tree(Instance inst, VertexId root) {
  validate_instance(inst);
  const std::size_t n = static_cast<std::size_t>(inst.n);
  if (root < 0 || static_cast<std::size_t>(root) >= n) {
    throw ValidationError(ErrorCode::VertexOutOfRange,
                          "root " + std::to_string(root));
  }
  std::size_t edge_count = 0;
  for (const auto& nbrs : inst.adj) edge_count += nbrs.size();
  edge_count /= 2;
  if (n == 0 || edge_count != n - 1) {
    throw ValidationError(ErrorCode::NotATree,
                          "expected " + std::to_string(n == 0 ? 0 : n - 1) +
                              " edges, found " + std::to_string(edge_count));
  }

  RootedTree tree;
  tree.root = root;
  tree.parent.assign(n, -1);
  tree.children.assign(n, {});
  tree.postorder.reserve(n);

  std::vector<char> seen(n, 0);
  // Iterative DFS; a vertex is emitted once its child range is exhausted.
  std::vector<std::pair<VertexId, std::size_t>> stack;
  stack.emplace_back(root, 0);
  seen[static_cast<std::size_t>(root)] = 1;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& nbrs = inst.adj[static_cast<std::size_t>(v)];
    if (next == 0) {
      for (VertexId u : nbrs) {
        if (!seen[static_cast<std::size_t>(u)]) {
          tree.parent[static_cast<std::size_t>(u)] = v;
          tree.children[static_cast<std::size_t>(v)].push_back(u);
        }
      }
    }
    if (next < tree.children[static_cast<std::size_t>(v)].size()) {
      const VertexId child = tree.children[static_cast<std::size_t>(v)][next];
      ++next;
      seen[static_cast<std::size_t>(child)] = 1;
      stack.emplace_back(child, 0);
    } else {
      tree.postorder.push_back(v);
      stack.pop_back();
    }
  }
  if (tree.postorder.size() != n) {
    throw ValidationError(ErrorCode::NotATree, "disconnected");
  }
  tree.instance = std::move(inst);
  return tree;
}

TreeCell& opt_fill(const RootedTree& tree, VertexId i, Budget j, TreeTable& D) {
  const std::size_t iu = static_cast<std::size_t>(i);
  TreeCell& cell = D.cells[iu][static_cast<std::size_t>(j)];
  const auto& kids = tree.children[iu];

  std::vector<ValueProfile> child_profiles;
  child_profiles.reserve(kids.size());
  for (VertexId c : kids) child_profiles.push_back(row_profile(D, c, j));
  const AllocResult exclude = alloc(child_profiles, j);

  const Budget b_i = tree.instance.budget[iu];
  bool include = false;
  AllocResult grant = exclude;
  std::vector<VertexId> grant_targets(kids.begin(), kids.end());
  if (j >= b_i) {
    std::vector<VertexId> grandkids;
    for (VertexId c : kids) {
      const auto& gk = tree.children[static_cast<std::size_t>(c)];
      grandkids.insert(grandkids.end(), gk.begin(), gk.end());
    }
    std::vector<ValueProfile> grand_profiles;
    grand_profiles.reserve(grandkids.size());
    for (VertexId g : grandkids) {
      grand_profiles.push_back(row_profile(D, g, j - b_i));
    }
    AllocResult inc = alloc(grand_profiles, j - b_i);
    inc.value += tree.instance.weight[iu];
    if (inc.value > exclude.value) {
      include = true;
      grant = std::move(inc);
      grant_targets = std::move(grandkids);
    }
  }

  cell.w = grant.value;
  cell.include = include;
  cell.split.clear();
  for (std::size_t t = 0; t < grant_targets.size(); ++t) {
    if (grant.allocation[t] > 0) {
      cell.split.emplace_back(grant_targets[t], grant.allocation[t]);
    }
  }
  return cell;
}

TreeTable fill_table(const RootedTree& tree, Budget B) {
  if (B < 0) {
    throw ValidationError(ErrorCode::BadParams, "negative budget");
  }
  const std::size_t n = static_cast<std::size_t>(tree.instance.n);
  const long long cells = static_cast<long long>(n) * (B + 1);
  if (cells > kCellGuard) {
    throw SolverError(ErrorCode::BudgetGuardExceeded,
                      std::to_string(cells) + " cells");
  }
  TreeTable D;
  D.B = B;
  D.cells.assign(n, std::vector<TreeCell>(static_cast<std::size_t>(B) + 1));
  for (VertexId i : tree.postorder) {
    for (Budget j = 0; j <= B; ++j) opt_fill(tree, i, j, D);
  }
  return D;
}

std::vector<VertexId> compute_budgeted_ind_set(const TreeTable& D, VertexId i,
                                               Budget j) {
  std::vector<VertexId> out;
  std::vector<std::pair<VertexId, Budget>> stack{{i, j}};
  while (!stack.empty()) {
    const auto [v, q] = stack.back();
    stack.pop_back();
    if (q <= 0) continue;
    const TreeCell& cell =
        D.cells[static_cast<std::size_t>(v)][static_cast<std::size_t>(q)];
    if (cell.include) out.push_back(v);
    for (const auto& [child, grant] : cell.split) {
      stack.emplace_back(child, grant);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ValueProfile tree_profile(const RootedTree& tree, Budget B) {
  const TreeTable D = fill_table(tree, B);
  return row_profile(D, tree.root, B);
}

Solution solve_tree(const RootedTree& tree) {
  const Budget B = tree.instance.B;
  const TreeTable D = fill_table(tree, B);
  const auto verts = compute_budgeted_ind_set(D, tree.root, B);
  Solution sol = make_solution(tree.instance, verts);
  assert(sol.total_weight ==
         D.cells[static_cast<std::size_t>(tree.root)]
                [static_cast<std::size_t>(B)]
                    .w);
  return sol;
}

Solution solve_tree(const Instance& inst, VertexId root) {
  return solve_tree(make_rooted_tree(inst, root));
}

ForestParts solve_forest_parts(std::span<const RootedTree> trees, Budget B) {
  std::vector<TreeTable> tables;
  std::vector<ValueProfile> profiles;
  tables.reserve(trees.size());
  profiles.reserve(trees.size());
  for (const RootedTree& tree : trees) {
    tables.push_back(fill_table(tree, B));
    profiles.push_back(row_profile(tables.back(), tree.root, B));
  }
  const AllocResult shares = alloc(profiles, B);

  ForestParts parts;
  parts.allocation = shares.allocation;
  parts.allocation.resize(trees.size(), 0);
  for (std::size_t t = 0; t < trees.size(); ++t) {
    const auto verts = compute_budgeted_ind_set(tables[t], trees[t].root,
                                                parts.allocation[t]);
    parts.per_tree.push_back(make_solution(trees[t].instance, verts));
    parts.total_weight += parts.per_tree.back().total_weight;
    parts.total_budget += parts.per_tree.back().total_budget;
  }
  assert(parts.total_weight == shares.value);
  return parts;
}

Solution solve_forest(const Instance& forest) {
  const auto comps = connected_components(forest);
  std::vector<RootedTree> trees;
  std::vector<std::vector<VertexId>> to_global;
  trees.reserve(comps.size());
  for (const auto& comp : comps) {
    std::vector<VertexId> map;
    Instance sub = induced_subgraph(forest, comp, &map);
    trees.push_back(make_rooted_tree(std::move(sub), 0));
    to_global.push_back(std::move(map));
  }
  const ForestParts parts = solve_forest_parts(trees, forest.B);
  std::vector<VertexId> picked;
  for (std::size_t t = 0; t < trees.size(); ++t) {
    for (VertexId v : parts.per_tree[t].vertices) {
      picked.push_back(to_global[t][static_cast<std::size_t>(v)]);
    }
  }
  return make_solution(forest, picked);
}

Solution solve_cycle(const Instance& cycle, Budget B) {
  validate_instance(cycle);
  const std::size_t n = static_cast<std::size_t>(cycle.n);
  if (n < 3) {
    throw ValidationError(ErrorCode::NotACycle,
                          "n = " + std::to_string(n) + " < 3");
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (cycle.adj[v].size() != 2) {
      throw ValidationError(ErrorCode::NotACycle,
                            "vertex " + std::to_string(v) + " has degree " +
                                std::to_string(cycle.adj[v].size()));
    }
  }
  if (connected_components(cycle).size() != 1) {
    throw ValidationError(ErrorCode::NotACycle, "disconnected");
  }

  Solution best;
  bool have = false;
  for (VertexId drop = 0; static_cast<std::size_t>(drop) < n; ++drop) {
    std::vector<VertexId> keep;
    keep.reserve(n - 1);
    for (VertexId v = 0; static_cast<std::size_t>(v) < n; ++v) {
      if (v != drop) keep.push_back(v);
    }
    std::vector<VertexId> map;
    Instance path = induced_subgraph(cycle, keep, &map);
    const VertexId endpoint = cycle.adj[static_cast<std::size_t>(drop)][0];
    const VertexId local_root = endpoint < drop ? endpoint : endpoint - 1;
    const RootedTree tree = make_rooted_tree(std::move(path), local_root);
    const TreeTable D = fill_table(tree, B);
    const auto local = compute_budgeted_ind_set(D, tree.root, B);
    std::vector<VertexId> global;
    global.reserve(local.size());
    for (VertexId v : local) global.push_back(map[static_cast<std::size_t>(v)]);
    Solution cand = make_solution(cycle, global);
    if (!have || better_solution(cand, best)) {
      best = std::move(cand);
      have = true;
    }
  }
  return best;
}

}  // namespace mwbis
