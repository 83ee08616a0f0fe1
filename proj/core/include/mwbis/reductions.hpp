#pragma once

#include <vector>

#include "mwbis/instance.hpp"
#include "mwbis/tree.hpp"

namespace mwbis {

struct KnapsackItem {
  Weight value = 0;
  Budget size = 1;
  bool operator==(const KnapsackItem&) const = default;
};

struct KnapsackInstance {
  std::vector<KnapsackItem> items;
  Budget capacity = 0;
  bool operator==(const KnapsackInstance&) const = default;
};

// Star tree whose budgeted-independent-set optimum equals the knapsack
// optimum: vertex 0 is the center (weight 0, budget capacity+1, never
// affordable), leaf j+1 carries item j's value and size, cap B = capacity.
RootedTree knapsack_to_star(const KnapsackInstance& kp);

// Textbook O(n * capacity) exact DP; the independent check for the
// reduction. Throws CapacityGuardExceeded when capacity > 1e8.
Weight solve_knapsack_dp(const KnapsackInstance& kp);

}  // namespace mwbis
