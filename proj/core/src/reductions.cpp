#include "mwbis/reductions.hpp"

#include <algorithm>
#include <string>

#include "mwbis/errors.hpp"

namespace mwbis {

namespace {

constexpr Budget kCapacityGuard = 100'000'000;

void validate_knapsack(const KnapsackInstance& kp) {
  if (kp.capacity < 0) {
    throw ValidationError(ErrorCode::BadParams, "negative capacity");
  }
  for (std::size_t j = 0; j < kp.items.size(); ++j) {
    if (kp.items[j].size < 1) {
      throw ValidationError(ErrorCode::NonPositiveBudget,
                            "item " + std::to_string(j));
    }
    if (kp.items[j].value < 0) {
      throw ValidationError(ErrorCode::NegativeWeight,
                            "item " + std::to_string(j));
    }
  }
}

}  // namespace

RootedTree knapsack_to_star(const KnapsackInstance& kp) {
  validate_knapsack(kp);
  const std::int32_t n = static_cast<std::int32_t>(kp.items.size());
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<Weight> weight(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Budget> budget(static_cast<std::size_t>(n) + 1, 1);
  budget[0] = kp.capacity + 1;
  for (std::int32_t j = 0; j < n; ++j) {
    edges.emplace_back(0, j + 1);
    weight[static_cast<std::size_t>(j) + 1] = kp.items[static_cast<std::size_t>(j)].value;
    budget[static_cast<std::size_t>(j) + 1] = kp.items[static_cast<std::size_t>(j)].size;
  }
  Instance star = make_instance(n + 1, edges, std::move(weight),
                                std::move(budget), kp.capacity);
  return make_rooted_tree(std::move(star), 0);
}

Weight solve_knapsack_dp(const KnapsackInstance& kp) {
  validate_knapsack(kp);
  if (kp.capacity > kCapacityGuard) {
    throw SolverError(ErrorCode::CapacityGuardExceeded,
                      std::to_string(kp.capacity));
  }
  std::vector<Weight> best(static_cast<std::size_t>(kp.capacity) + 1, 0);
  for (const KnapsackItem& item : kp.items) {
    for (Budget c = kp.capacity; c >= item.size; --c) {
      best[static_cast<std::size_t>(c)] =
          std::max(best[static_cast<std::size_t>(c)],
                   best[static_cast<std::size_t>(c - item.size)] + item.value);
    }
  }
  return best[static_cast<std::size_t>(kp.capacity)];
}

}  // namespace mwbis
