#include "mwbis/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace mwbis {

namespace {

std::vector<VertexId> mask_to_vertices(std::uint32_t mask) {
  std::vector<VertexId> out;
  for (VertexId v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1u) out.push_back(v);
  }
  return out;
}

Solution best_subset(const Instance& inst, const std::vector<Weight>& objective,
                     std::int32_t cap) {
  const std::int32_t effective_cap = std::min<std::int32_t>(cap, 30);
  if (inst.n > effective_cap) {
    throw SolverError(ErrorCode::InstanceTooLarge,
                      "brute force enumerates 2^n subsets; n=" + std::to_string(inst.n) +
                          " exceeds cap " + std::to_string(effective_cap));
  }
  const auto n = static_cast<std::uint32_t>(inst.n);
  std::vector<std::uint32_t> nbr_mask(n, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    for (VertexId u : inst.adj[v]) nbr_mask[v] |= 1u << static_cast<std::uint32_t>(u);
  }

  std::uint32_t best_mask = 0;
  Weight best_weight = 0;
  Budget best_budget = 0;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    Weight w = 0;
    Budget b = 0;
    bool independent = true;
    for (std::uint32_t rest = mask; rest != 0;) {
      const std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(rest));
      rest &= rest - 1;
      if (nbr_mask[v] & mask) {
        independent = false;
        break;
      }
      w += objective[v];
      b += inst.budget[v];
    }
    if (!independent || b > inst.B) continue;
    if (w > best_weight || (w == best_weight && b < best_budget)) {
      best_mask = mask;
      best_weight = w;
      best_budget = b;
    } else if (w == best_weight && b == best_budget && best_mask != 0) {
      const auto cand = mask_to_vertices(mask);
      const auto cur = mask_to_vertices(best_mask);
      if (std::lexicographical_compare(cand.begin(), cand.end(), cur.begin(), cur.end())) {
        best_mask = mask;
      }
    }
  }
  return make_solution(inst, mask_to_vertices(best_mask));
}

}  // namespace

Solution brute_force_mwbis(const Instance& inst, std::int32_t cap) {
  return best_subset(inst, inst.weight, cap);
}

Solution brute_force_mbis(const Instance& inst, std::int32_t cap) {
  std::vector<Weight> unit(static_cast<std::size_t>(inst.n), 1);
  return best_subset(inst, unit, cap);
}

}  // namespace mwbis
