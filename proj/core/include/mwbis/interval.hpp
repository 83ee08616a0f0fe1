#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mwbis/instance.hpp"

namespace mwbis {

struct Interval {
  std::int64_t start = 0;
  std::int64_t finish = 0;  // start < finish
  Weight weight = 0;
  Budget budget = 1;
  VertexId id = 0;  // position in the caller's original order
  bool operator==(const Interval&) const = default;
};

// Intervals sorted by nondecreasing finish; pred[j] (1-based, 0 = none) is
// the largest m < j whose interval ends at or before interval j starts.
// Two intervals are compatible iff one finishes no later than the other
// starts (closed intervals, touching allowed).
struct IntervalSet {
  std::vector<Interval> intervals;
  std::vector<std::int32_t> pred;
  Budget B = 0;
  bool operator==(const IntervalSet&) const = default;
};

// Sorts by (finish, start, weight, budget, id), validates, and fills pred.
IntervalSet make_interval_set(std::vector<Interval> intervals, Budget B);

// Requires finish values nondecreasing; throws UnsortedInput otherwise.
std::vector<std::int32_t> compute_predecessors(std::span<const Interval> sorted);

// Exact DP over (interval prefix, budget) cells with flag-directed
// backtracking. Solution vertices are original interval ids.
// Throws BudgetGuardExceeded when (n+1)*(B+1) > 1e8 cells.
Solution solve_intervals(const IntervalSet& iset);

// Graph with one vertex per sorted interval, edges between intersecting
// pairs; lets the subset-enumeration oracle cross-check the DP.
Instance intersection_graph(const IntervalSet& iset);

}  // namespace mwbis
