#pragma once

#include <vector>

#include "mwbis/instance.hpp"

namespace mwbis {

enum class StopReason {
  Exhausted,    // every vertex in the order was considered
  BudgetShort,  // scan hit a vertex costing more than what was left
};

struct GreedyTrace {
  std::vector<VertexId> order;    // nondecreasing budget, ties by id
  std::vector<VertexId> picks;    // accepted vertices, acceptance order
  std::vector<Budget> remaining;  // budget left before considering order[i]
  StopReason stop_reason = StopReason::Exhausted;
};

// Cardinality greedy: scans vertices cheapest budget first, accepts any
// vertex with no accepted neighbor, and stops at the first vertex it cannot
// afford. Weights are ignored.
GreedyTrace mbf(const Instance& inst);

// Same scan, but unaffordable vertices are skipped instead of ending the
// run. Picks provably match mbf (later vertices only get costlier);
// provided for comparison runs.
GreedyTrace mbf_keep_scanning(const Instance& inst);

// Weighted greedy by nonincreasing weight/budget ratio (ties: smaller
// budget, then id), skipping unaffordable or conflicting vertices. Returns
// picks in scan order. Its weight can trail the optimum by an unbounded
// factor; it exists to demonstrate exactly that.
std::vector<VertexId> mwbrf(const Instance& inst);

// True iff no vertex has d+1 pairwise non-adjacent neighbors, by exhaustive
// search per neighborhood. Throws TooLargeForExactCheck when a degree
// exceeds degree_cap, BadParams when d < 1.
bool verify_claw_free(const Instance& inst, int d, int degree_cap = 20);

int max_degree(const Instance& inst);

}  // namespace mwbis
