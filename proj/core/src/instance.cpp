#include "mwbis/instance.hpp"

#include <algorithm>
#include <string>

namespace mwbis {

namespace {

void check_vertex_range(std::int32_t n, VertexId v, const char* what) {
  if (v < 0 || v >= n) {
    throw ValidationError(ErrorCode::VertexOutOfRange,
                          std::string(what) + " references vertex " + std::to_string(v) +
                              " outside 0.." + std::to_string(n - 1));
  }
}

}  // namespace

Instance make_instance(std::int32_t n, std::span<const std::pair<VertexId, VertexId>> edges,
                       std::vector<Weight> weight, std::vector<Budget> budget, Budget B) {
  if (n < 0 || static_cast<std::size_t>(n) != weight.size() ||
      static_cast<std::size_t>(n) != budget.size()) {
    throw ValidationError(ErrorCode::BadParams, "vertex count does not match weight/budget lists");
  }
  if (B < 0) {
    throw ValidationError(ErrorCode::BadParams, "global budget B must be nonnegative");
  }
  Instance inst;
  inst.n = n;
  inst.adj.resize(static_cast<std::size_t>(n));
  inst.weight = std::move(weight);
  inst.budget = std::move(budget);
  inst.B = B;
  for (const auto& [u, v] : edges) {
    check_vertex_range(n, u, "edge");
    check_vertex_range(n, v, "edge");
    if (u == v) {
      throw ValidationError(ErrorCode::SelfLoop, "edge (" + std::to_string(u) + "," +
                                                     std::to_string(v) + ") is a self-loop");
    }
    inst.adj[static_cast<std::size_t>(u)].push_back(v);
    inst.adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nbrs : inst.adj) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  validate_instance(inst);
  return inst;
}

const Instance& validate_instance(const Instance& raw) {
  const auto n = raw.n;
  if (n < 0 || raw.adj.size() != static_cast<std::size_t>(n) ||
      raw.weight.size() != static_cast<std::size_t>(n) ||
      raw.budget.size() != static_cast<std::size_t>(n)) {
    throw ValidationError(ErrorCode::BadParams, "field sizes do not match vertex count");
  }
  if (raw.B < 0) {
    throw ValidationError(ErrorCode::BadParams, "global budget B must be nonnegative");
  }
  for (VertexId v = 0; v < n; ++v) {
    const auto sv = static_cast<std::size_t>(v);
    if (raw.budget[sv] < 1) {
      throw ValidationError(ErrorCode::NonPositiveBudget,
                            "vertex " + std::to_string(v) + " has budget " +
                                std::to_string(raw.budget[sv]) + " (must be >= 1)");
    }
    if (raw.weight[sv] < 0) {
      throw ValidationError(ErrorCode::NegativeWeight,
                            "vertex " + std::to_string(v) + " has negative weight");
    }
    for (VertexId u : raw.adj[sv]) {
      check_vertex_range(n, u, "adjacency list");
      if (u == v) {
        throw ValidationError(ErrorCode::SelfLoop,
                              "vertex " + std::to_string(v) + " is adjacent to itself");
      }
      const auto& back = raw.adj[static_cast<std::size_t>(u)];
      if (!std::binary_search(back.begin(), back.end(), v)) {
        throw ValidationError(ErrorCode::AsymmetricAdjacency,
                              "edge (" + std::to_string(v) + "," + std::to_string(u) +
                                  ") is missing its reverse entry");
      }
    }
    if (!std::is_sorted(raw.adj[sv].begin(), raw.adj[sv].end())) {
      throw ValidationError(ErrorCode::BadParams,
                            "adjacency list of vertex " + std::to_string(v) + " is not sorted");
    }
  }
  return raw;
}

bool has_edge(const Instance& inst, VertexId u, VertexId v) {
  const auto& nbrs = inst.adj[static_cast<std::size_t>(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool is_independent(const Instance& inst, std::span<const VertexId> s) {
  std::vector<bool> in_set(static_cast<std::size_t>(inst.n), false);
  for (VertexId v : s) {
    check_vertex_range(inst.n, v, "set");
    in_set[static_cast<std::size_t>(v)] = true;
  }
  for (VertexId v : s) {
    for (VertexId u : inst.adj[static_cast<std::size_t>(v)]) {
      if (in_set[static_cast<std::size_t>(u)]) return false;
    }
  }
  return true;
}

std::vector<std::pair<VertexId, VertexId>> edge_list(const Instance& inst) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 0; v < inst.n; ++v) {
    for (VertexId u : inst.adj[static_cast<std::size_t>(v)]) {
      if (v < u) edges.emplace_back(v, u);
    }
  }
  return edges;
}

std::vector<std::vector<VertexId>> connected_components(const Instance& inst) {
  std::vector<std::vector<VertexId>> components;
  std::vector<bool> seen(static_cast<std::size_t>(inst.n), false);
  std::vector<VertexId> stack;
  for (VertexId start = 0; start < inst.n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<VertexId> comp;
    stack.push_back(start);
    seen[static_cast<std::size_t>(start)] = true;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId u : inst.adj[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = true;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

Instance induced_subgraph(const Instance& inst, std::span<const VertexId> verts,
                          std::vector<VertexId>* local_to_global) {
  std::vector<VertexId> global_to_local(static_cast<std::size_t>(inst.n), -1);
  Instance sub;
  sub.n = static_cast<std::int32_t>(verts.size());
  sub.adj.resize(verts.size());
  sub.weight.reserve(verts.size());
  sub.budget.reserve(verts.size());
  sub.B = inst.B;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const VertexId g = verts[i];
    check_vertex_range(inst.n, g, "induced subgraph");
    if (global_to_local[static_cast<std::size_t>(g)] != -1) {
      throw ValidationError(ErrorCode::BadParams,
                            "vertex " + std::to_string(g) + " listed twice");
    }
    global_to_local[static_cast<std::size_t>(g)] = static_cast<VertexId>(i);
    sub.weight.push_back(inst.weight[static_cast<std::size_t>(g)]);
    sub.budget.push_back(inst.budget[static_cast<std::size_t>(g)]);
  }
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (VertexId u : inst.adj[static_cast<std::size_t>(verts[i])]) {
      const VertexId lu = global_to_local[static_cast<std::size_t>(u)];
      if (lu != -1) sub.adj[i].push_back(lu);
    }
    std::sort(sub.adj[i].begin(), sub.adj[i].end());
  }
  if (local_to_global) {
    local_to_global->assign(verts.begin(), verts.end());
  }
  return sub;
}

Solution make_solution(const Instance& inst, std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  Solution s;
  s.vertices = std::move(vertices);
  for (VertexId v : s.vertices) {
    check_vertex_range(inst.n, v, "solution");
    s.total_weight += inst.weight[static_cast<std::size_t>(v)];
    s.total_budget += inst.budget[static_cast<std::size_t>(v)];
  }
  return s;
}

bool better_solution(const Solution& a, const Solution& b) {
  if (a.total_weight != b.total_weight) return a.total_weight > b.total_weight;
  if (a.total_budget != b.total_budget) return a.total_budget < b.total_budget;
  return std::lexicographical_compare(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                                      b.vertices.end());
}

bool is_feasible(const Instance& inst, const Solution& s) {
  return s.total_budget <= inst.B && is_independent(inst, s.vertices);
}

}  // namespace mwbis
