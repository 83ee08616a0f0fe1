#include "mwbis/greedy.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "mwbis/errors.hpp"

namespace mwbis {

namespace {

std::vector<VertexId> budget_order(const Instance& inst) {
  std::vector<VertexId> order(static_cast<std::size_t>(inst.n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    const Budget ba = inst.budget[static_cast<std::size_t>(a)];
    const Budget bb = inst.budget[static_cast<std::size_t>(b)];
    if (ba != bb) return ba < bb;
    return a < b;
  });
  return order;
}

bool conflicts(const Instance& inst, const std::vector<VertexId>& picks,
               VertexId v) {
  for (VertexId p : picks) {
    if (has_edge(inst, p, v)) return true;
  }
  return false;
}

GreedyTrace scan(const Instance& inst, bool stop_when_short) {
  validate_instance(inst);
  GreedyTrace trace;
  trace.order = budget_order(inst);
  Budget left = inst.B;
  for (VertexId v : trace.order) {
    trace.remaining.push_back(left);
    const Budget need = inst.budget[static_cast<std::size_t>(v)];
    if (left < need) {
      trace.stop_reason = StopReason::BudgetShort;
      if (stop_when_short) return trace;
      continue;
    }
    if (!conflicts(inst, trace.picks, v)) {
      trace.picks.push_back(v);
      left -= need;
    }
  }
  return trace;
}

// Searches candidates[idx..] for `need` more pairwise non-adjacent picks;
// blocked marks candidates adjacent to something already picked.
bool grow_independent(const std::vector<std::uint32_t>& nbr_masks,
                      std::size_t idx, std::uint32_t blocked, int need) {
  if (need == 0) return true;
  if (nbr_masks.size() - idx < static_cast<std::size_t>(need)) return false;
  for (std::size_t i = idx; i + static_cast<std::size_t>(need) <= nbr_masks.size(); ++i) {
    if (blocked & (std::uint32_t{1} << i)) continue;
    if (grow_independent(nbr_masks, i + 1, blocked | nbr_masks[i], need - 1)) {
      return true;
    }
  }
  return false;
}

}  // namespace

GreedyTrace mbf(const Instance& inst) { return scan(inst, true); }

GreedyTrace mbf_keep_scanning(const Instance& inst) {
  return scan(inst, false);
}

std::vector<VertexId> mwbrf(const Instance& inst) {
  validate_instance(inst);
  std::vector<VertexId> order(static_cast<std::size_t>(inst.n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    const auto au = static_cast<std::size_t>(a);
    const auto bu = static_cast<std::size_t>(b);
    // w_a/b_a vs w_b/b_b by cross product; wide type since both factors
    // are 64-bit.
    const auto lhs = static_cast<__int128>(inst.weight[au]) * inst.budget[bu];
    const auto rhs = static_cast<__int128>(inst.weight[bu]) * inst.budget[au];
    if (lhs != rhs) return lhs > rhs;
    if (inst.budget[au] != inst.budget[bu]) {
      return inst.budget[au] < inst.budget[bu];
    }
    return a < b;
  });
  std::vector<VertexId> picks;
  Budget left = inst.B;
  for (VertexId v : order) {
    const Budget need = inst.budget[static_cast<std::size_t>(v)];
    if (need > left) continue;
    if (conflicts(inst, picks, v)) continue;
    picks.push_back(v);
    left -= need;
  }
  return picks;
}

bool verify_claw_free(const Instance& inst, int d, int degree_cap) {
  validate_instance(inst);
  if (d < 1) {
    throw ValidationError(ErrorCode::BadParams, "d = " + std::to_string(d));
  }
  if (degree_cap > 32) degree_cap = 32;
  for (VertexId v = 0; v < inst.n; ++v) {
    const auto& nbrs = inst.adj[static_cast<std::size_t>(v)];
    if (nbrs.size() <= static_cast<std::size_t>(d)) continue;
    if (nbrs.size() > static_cast<std::size_t>(degree_cap)) {
      throw SolverError(ErrorCode::TooLargeForExactCheck,
                        "vertex " + std::to_string(v) + " has degree " +
                            std::to_string(nbrs.size()));
    }
    // nbr_masks[i] = bitset of neighbors-of-v adjacent to nbrs[i].
    std::vector<std::uint32_t> nbr_masks(nbrs.size(), 0);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = 0; j < nbrs.size(); ++j) {
        if (i != j && has_edge(inst, nbrs[i], nbrs[j])) {
          nbr_masks[i] |= std::uint32_t{1} << j;
        }
      }
    }
    if (grow_independent(nbr_masks, 0, 0, d + 1)) return false;
  }
  return true;
}

int max_degree(const Instance& inst) {
  std::size_t best = 0;
  for (const auto& nbrs : inst.adj) best = std::max(best, nbrs.size());
  return static_cast<int>(best);
}

}  // namespace mwbis
