#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mwbis/errors.hpp"

namespace mwbis {

using VertexId = std::int32_t;
// Weights are fixed-point milli-units (1 unit = 1000) so solver-vs-oracle
// comparisons are exact integer equality.
using Weight = std::int64_t;
using Budget = std::int64_t;

// Undirected graph with per-vertex weight (>= 0) and budget (>= 1), plus a
// global budget cap B. Adjacency lists are sorted, symmetric, irreflexive.
struct Instance {
  std::int32_t n = 0;
  std::vector<std::vector<VertexId>> adj;
  std::vector<Weight> weight;
  std::vector<Budget> budget;
  Budget B = 0;
  bool operator==(const Instance&) const = default;
};

// Builds adjacency from an edge list (duplicates collapsed) and validates.
Instance make_instance(std::int32_t n, std::span<const std::pair<VertexId, VertexId>> edges,
                       std::vector<Weight> weight, std::vector<Budget> budget, Budget B);

// Returns the instance unchanged iff every Instance invariant holds.
const Instance& validate_instance(const Instance& raw);

bool has_edge(const Instance& inst, VertexId u, VertexId v);

// True iff no edge joins two members of s. Ids must be < n.
bool is_independent(const Instance& inst, std::span<const VertexId> s);

std::vector<std::pair<VertexId, VertexId>> edge_list(const Instance& inst);

std::vector<std::vector<VertexId>> connected_components(const Instance& inst);

// Subgraph induced by verts, with vertices renumbered 0..|verts|-1 in the
// given order. local_to_global (optional) receives the id mapping.
Instance induced_subgraph(const Instance& inst, std::span<const VertexId> verts,
                          std::vector<VertexId>* local_to_global = nullptr);

// A vertex set certified against its owning instance: sorted ids plus weight
// and budget totals.
struct Solution {
  std::vector<VertexId> vertices;
  Weight total_weight = 0;
  Budget total_budget = 0;
  bool operator==(const Solution&) const = default;
};

// Sorts, checks ranges, and computes the totals.
Solution make_solution(const Instance& inst, std::vector<VertexId> vertices);

// Preference order used wherever a single optimum must be chosen among
// candidates: larger weight, then smaller budget, then lexicographically
// smaller vertex sequence.
bool better_solution(const Solution& a, const Solution& b);

// Independence plus total_budget <= B.
bool is_feasible(const Instance& inst, const Solution& s);

}  // namespace mwbis
