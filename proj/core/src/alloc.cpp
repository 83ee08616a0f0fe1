#include "mwbis/alloc.hpp"

#include <algorithm>

#include "mwbis/errors.hpp"

namespace mwbis {

ValueProfile make_profile(std::vector<Weight> raw) {
  ValueProfile profile;
  profile.values = std::move(raw);
  Weight running = 0;
  for (auto& v : profile.values) {
    if (v < running) {
      v = running;
      profile.monotonized = true;
    }
    running = v;
  }
  return profile;
}

AllocTable alloc_table(std::span<const ValueProfile> profiles, Budget p) {
  if (p < 0) {
    throw ValidationError(ErrorCode::BadParams, "negative budget");
  }
  const std::size_t k = profiles.size();
  const std::size_t width = static_cast<std::size_t>(p) + 1;
  for (std::size_t j = 0; j < k; ++j) {
    if (profiles[j].values.size() < width) {
      throw SolverError(ErrorCode::ProfileTooShort,
                        "profile " + std::to_string(j) + " has " +
                            std::to_string(profiles[j].values.size()) +
                            " entries, needs " + std::to_string(width));
    }
  }

  AllocTable table;
  table.choice.assign(k, std::vector<Budget>(width, 0));
  // h[q] = best value when profiles j..k-1 share budget q; filled from the
  // last profile backwards so reconstruction runs forward and ties hand
  // earlier profiles the smaller share.
  std::vector<Weight> h(width, 0);
  for (std::size_t jj = k; jj-- > 0;) {
    std::vector<Weight> next(width, 0);
    const auto& f = profiles[jj].values;
    for (std::size_t q = 0; q < width; ++q) {
      Weight best = f[0] + h[q];
      Budget best_t = 0;
      for (std::size_t t = 1; t <= q; ++t) {
        const Weight cand = f[t] + h[q - t];
        if (cand > best) {
          best = cand;
          best_t = static_cast<Budget>(t);
        }
      }
      next[q] = best;
      table.choice[jj][q] = best_t;
    }
    h = std::move(next);
  }
  table.best = std::move(h);
  return table;
}

AllocResult alloc(std::span<const ValueProfile> profiles, Budget p) {
  AllocResult result;
  if (profiles.empty()) {
    return result;
  }
  const AllocTable table = alloc_table(profiles, p);
  result.value = table.best[static_cast<std::size_t>(p)];
  result.allocation.resize(profiles.size(), 0);
  Budget remaining = p;
  for (std::size_t j = 0; j < profiles.size(); ++j) {
    const Budget t = table.choice[j][static_cast<std::size_t>(remaining)];
    result.allocation[j] = t;
    remaining -= t;
  }
  return result;
}

}  // namespace mwbis
