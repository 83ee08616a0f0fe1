#pragma once

#include <span>
#include <vector>

#include "mwbis/instance.hpp"

namespace mwbis {

// values[t] = best value achievable with total budget at most t, for
// t = 0..p. Nondecreasing by construction.
struct ValueProfile {
  std::vector<Weight> values;
  // True iff the running-maximum pass changed at least one raw entry.
  bool monotonized = false;
};

// Normalizes a raw table into a nondecreasing profile.
ValueProfile make_profile(std::vector<Weight> raw);

struct AllocResult {
  std::vector<Budget> allocation;  // one entry per profile, sum <= p
  Weight value = 0;
};

// Full DP output: the optimum for every budget 0..p, plus per-profile
// choices for reconstruction. best[q] = optimum with total budget <= q.
// choice[j][q] = budget granted to profile j when profiles j..k-1 share q,
// smallest maximizer first, so earlier profiles receive less on ties.
struct AllocTable {
  std::vector<Weight> best;
  std::vector<std::vector<Budget>> choice;
};

AllocTable alloc_table(std::span<const ValueProfile> profiles, Budget p);

// Distributes p budget units across the profiles maximizing the summed
// value, with total allocation <= p. k = 0 yields value 0 and an empty
// allocation. Throws ProfileTooShort when a profile has fewer than p+1
// entries. Runs in O(k p^2).
AllocResult alloc(std::span<const ValueProfile> profiles, Budget p);

}  // namespace mwbis
