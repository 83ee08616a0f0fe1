#pragma once

#include <span>
#include <utility>
#include <vector>

#include "mwbis/alloc.hpp"
#include "mwbis/instance.hpp"

namespace mwbis {

struct RootedTree {
  Instance instance;
  VertexId root = 0;
  std::vector<VertexId> parent;                 // -1 at the root
  std::vector<std::vector<VertexId>> children;  // ascending per vertex
  std::vector<VertexId> postorder;              // every vertex after its descendants
};

// Throws NotATree when the instance is not connected and acyclic.
RootedTree make_rooted_tree(Instance inst, VertexId root = 0);

struct TreeCell {
  Weight w = 0;
  bool include = false;
  // Nonzero budget grants only: (child id, grant) when include is false,
  // (grandchild id, grant) when include is true.
  std::vector<std::pair<VertexId, Budget>> split;
};

struct TreeTable {
  Budget B = 0;
  std::vector<std::vector<TreeCell>> cells;  // cells[vertex][budget]
};

// Fills cell (i, j). All descendant cells at budgets <= j must already be
// filled; fill_table guarantees that via postorder.
TreeCell& opt_fill(const RootedTree& tree, VertexId i, Budget j, TreeTable& D);

// Fills every cell. Throws BudgetGuardExceeded when n*(B+1) > 1e8 cells.
TreeTable fill_table(const RootedTree& tree, Budget B);

// Walks the filled table from (i, j) and returns the recorded optimum set,
// ascending. Reads each cell's split before descending.
std::vector<VertexId> compute_budgeted_ind_set(const TreeTable& D, VertexId i,
                                               Budget j);

// Root-row profile: best subtree value for every budget 0..B.
ValueProfile tree_profile(const RootedTree& tree, Budget B);

Solution solve_tree(const RootedTree& tree);
Solution solve_tree(const Instance& inst, VertexId root = 0);

struct ForestParts {
  std::vector<Solution> per_tree;  // vertex ids local to each tree
  std::vector<Budget> allocation;
  Weight total_weight = 0;
  Budget total_budget = 0;
};

// Shares B across vertex-disjoint trees: one value profile per tree, one
// alloc call, one retrieval per tree at its granted budget.
ForestParts solve_forest_parts(std::span<const RootedTree> trees, Budget B);

// Splits the instance into components, solves each as a tree rooted at its
// smallest vertex, and unions the retrievals under the instance's B.
Solution solve_forest(const Instance& forest);

// Deletes each vertex in turn, solves the remaining path as a tree rooted
// at the deleted vertex's smaller neighbor, and keeps the best result.
// Throws NotACycle unless every vertex has degree 2, the graph is
// connected, and n >= 3.
Solution solve_cycle(const Instance& cycle, Budget B);

}  // namespace mwbis
