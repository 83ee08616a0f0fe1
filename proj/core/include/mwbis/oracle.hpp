#pragma once

#include "mwbis/instance.hpp"

namespace mwbis {

inline constexpr std::int32_t kDefaultOracleCap = 22;

// Exhaustive maximum-weight budgeted independent set over all 2^n subsets.
// Ties: smaller total budget, then lexicographically smaller vertex sequence.
// Throws InstanceTooLarge when n exceeds cap.
Solution brute_force_mwbis(const Instance& inst, std::int32_t cap = kDefaultOracleCap);

// Cardinality objective over the same budget constraint (every vertex counts
// 1); the returned totals are computed against the real instance weights.
Solution brute_force_mbis(const Instance& inst, std::int32_t cap = kDefaultOracleCap);

}  // namespace mwbis
