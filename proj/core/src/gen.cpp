#include "mwbis/gen.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "mwbis/errors.hpp"

namespace mwbis {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(ErrorCode::BadParams, what);
}

constexpr std::int64_t kMaxUnits = 1'000'000'000'000;

void check_common(std::int32_t n, Weight wmax_units, Budget bmax, Budget B) {
  require(n >= 0, "vertex count must be >= 0");
  require(wmax_units >= 0 && wmax_units <= kMaxUnits,
          "wmax must lie in [0, 1e12]");
  require(bmax >= 1, "bmax must be >= 1");
  require(B >= 0, "B must be >= 0");
}

std::vector<Weight> draw_weights(Rng& rng, std::int32_t n, Weight wmax_units) {
  std::vector<Weight> w(static_cast<std::size_t>(n));
  for (Weight& x : w) x = 1000 * rng.range(0, wmax_units);
  return w;
}

std::vector<Budget> draw_budgets(Rng& rng, std::int32_t n, Budget bmax) {
  std::vector<Budget> b(static_cast<std::size_t>(n));
  for (Budget& x : b) x = rng.range(1, bmax);
  return b;
}

Instance assemble(Rng& rng, std::int32_t n,
                  std::span<const std::pair<VertexId, VertexId>> edges,
                  Weight wmax_units, Budget bmax, Budget B) {
  auto weight = draw_weights(rng, n, wmax_units);
  auto budget = draw_budgets(rng, n, bmax);
  return make_instance(n, edges, std::move(weight), std::move(budget), B);
}

// Appends random-parent tree edges over vertices offset..offset+size-1.
void tree_edges(Rng& rng, VertexId offset, std::int32_t size,
                std::vector<std::pair<VertexId, VertexId>>& edges) {
  for (std::int32_t v = 1; v < size; ++v) {
    const auto parent =
        static_cast<VertexId>(rng.bounded(static_cast<std::uint64_t>(v)));
    edges.emplace_back(offset + parent, offset + static_cast<VertexId>(v));
  }
}

bool grow_nonadjacent(const Instance& g, const std::vector<VertexId>& nbrs,
                      std::size_t from, std::vector<VertexId>& chosen,
                      std::size_t want) {
  if (chosen.size() == want) return true;
  if (from >= nbrs.size()) return false;
  if (nbrs.size() - from + chosen.size() < want) return false;
  const VertexId cand = nbrs[from];
  bool independent = true;
  for (VertexId x : chosen) {
    if (has_edge(g, x, cand)) {
      independent = false;
      break;
    }
  }
  if (independent) {
    chosen.push_back(cand);
    if (grow_nonadjacent(g, nbrs, from + 1, chosen, want)) return true;
    chosen.pop_back();
  }
  return grow_nonadjacent(g, nbrs, from + 1, chosen, want);
}

// Two pairwise non-adjacent neighbors out of some vertex's d+1 witness, or
// nullopt when every vertex is clean.
std::optional<std::pair<VertexId, VertexId>> find_blocking_pair(
    const Instance& g, int d) {
  const auto want = static_cast<std::size_t>(d) + 1;
  for (VertexId c = 0; c < g.n; ++c) {
    const auto& nbrs = g.adj[static_cast<std::size_t>(c)];
    if (nbrs.size() < want) continue;
    std::vector<VertexId> chosen;
    if (grow_nonadjacent(g, nbrs, 0, chosen, want)) {
      return std::make_pair(chosen[0], chosen[1]);
    }
  }
  return std::nullopt;
}

}  // namespace

std::uint64_t Rng::bounded(std::uint64_t n) {
  require(n >= 1, "bounded needs n >= 1");
  unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
  auto low = static_cast<std::uint64_t>(m);
  if (low < n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(next()) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  require(lo <= hi, "empty range");
  const std::uint64_t width = static_cast<std::uint64_t>(hi) -
                              static_cast<std::uint64_t>(lo) + 1;
  if (width == 0) return static_cast<std::int64_t>(next());
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) +
                                   bounded(width));
}

Instance gen_tree(Rng& rng, std::int32_t n, Weight wmax_units, Budget bmax,
                  Budget B) {
  check_common(n, wmax_units, bmax, B);
  require(n >= 1, "a tree needs at least one vertex");
  std::vector<std::pair<VertexId, VertexId>> edges;
  tree_edges(rng, 0, n, edges);
  return assemble(rng, n, edges, wmax_units, bmax, B);
}

Instance gen_forest(Rng& rng, std::int32_t n, std::int32_t trees,
                    Weight wmax_units, Budget bmax, Budget B) {
  check_common(n, wmax_units, bmax, B);
  require(trees >= 1 && trees <= n, "need 1 <= trees <= n");
  std::vector<std::pair<VertexId, VertexId>> edges;
  VertexId offset = 0;
  std::int32_t remaining = n;
  for (std::int32_t t = 0; t < trees; ++t) {
    const std::int32_t left_after = trees - 1 - t;
    const auto size = (t + 1 == trees)
                          ? remaining
                          : static_cast<std::int32_t>(
                                rng.range(1, remaining - left_after));
    tree_edges(rng, offset, size, edges);
    offset += size;
    remaining -= size;
  }
  return assemble(rng, n, edges, wmax_units, bmax, B);
}

Instance gen_cycle(Rng& rng, std::int32_t n, Weight wmax_units, Budget bmax,
                   Budget B) {
  check_common(n, wmax_units, bmax, B);
  require(n >= 3, "a cycle needs at least three vertices");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::int32_t v = 0; v < n; ++v) {
    edges.emplace_back(static_cast<VertexId>(v),
                       static_cast<VertexId>((v + 1) % n));
  }
  return assemble(rng, n, edges, wmax_units, bmax, B);
}

Instance gen_graph(Rng& rng, std::int32_t n, int edge_permille,
                   Weight wmax_units, Budget bmax, Budget B) {
  check_common(n, wmax_units, bmax, B);
  require(edge_permille >= 0 && edge_permille <= 1000,
          "edge rate must lie in [0, 1000]");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::int32_t u = 0; u < n; ++u) {
    for (std::int32_t v = u + 1; v < n; ++v) {
      if (rng.bounded(1000) < static_cast<std::uint64_t>(edge_permille)) {
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
      }
    }
  }
  return assemble(rng, n, edges, wmax_units, bmax, B);
}

IntervalSet gen_intervals(Rng& rng, std::int32_t n, std::int64_t span,
                          Weight wmax_units, Budget bmax, Budget B) {
  check_common(n, wmax_units, bmax, B);
  require(span >= 1, "span must be >= 1");
  const std::int64_t max_len = std::max<std::int64_t>(1, span / 3);
  std::vector<Interval> intervals;
  intervals.reserve(static_cast<std::size_t>(n));
  for (std::int32_t i = 0; i < n; ++i) {
    Interval iv;
    iv.start = rng.range(0, span - 1);
    iv.finish = iv.start + rng.range(1, max_len);
    iv.weight = 1000 * rng.range(0, wmax_units);
    iv.budget = rng.range(1, bmax);
    iv.id = static_cast<VertexId>(i);
    intervals.push_back(iv);
  }
  return make_interval_set(std::move(intervals), B);
}

Instance gen_claw_free(Rng& rng, std::int32_t n, int d, int edge_permille,
                       Weight wmax_units, Budget bmax, Budget B) {
  check_common(n, wmax_units, bmax, B);
  require(d >= 1, "d must be >= 1");
  require(n <= 30, "the repair search handles n <= 30");
  require(edge_permille >= 0 && edge_permille <= 1000,
          "edge rate must lie in [0, 1000]");
  std::set<std::pair<VertexId, VertexId>> edges;
  for (std::int32_t u = 0; u < n; ++u) {
    for (std::int32_t v = u + 1; v < n; ++v) {
      if (rng.bounded(1000) < static_cast<std::uint64_t>(edge_permille)) {
        edges.emplace(static_cast<VertexId>(u), static_cast<VertexId>(v));
      }
    }
  }
  const auto weight = draw_weights(rng, n, wmax_units);
  const auto budget = draw_budgets(rng, n, bmax);
  while (true) {
    const std::vector<std::pair<VertexId, VertexId>> list(edges.begin(),
                                                          edges.end());
    Instance g = make_instance(n, list, weight, budget, B);
    const auto pair = find_blocking_pair(g, d);
    if (!pair) return g;
    edges.emplace(std::min(pair->first, pair->second),
                  std::max(pair->first, pair->second));
  }
}

Instance gen_mbf_tight(int d) {
  require(d >= 2, "d must be >= 2");
  const auto n = static_cast<std::int32_t>(d) + 1;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<Weight> weight(static_cast<std::size_t>(n), 1000);
  std::vector<Budget> budget(static_cast<std::size_t>(n), 2);
  budget[0] = 1;
  for (std::int32_t leaf = 1; leaf < n; ++leaf) {
    edges.emplace_back(0, static_cast<VertexId>(leaf));
  }
  return make_instance(n, edges, std::move(weight), std::move(budget),
                       2 * static_cast<Budget>(d));
}

Instance gen_mwbrf_bad(int d, std::int64_t M) {
  require(d >= 2, "d must be >= 2");
  require(M >= 1 && M <= kMaxUnits, "M must lie in [1, 1e12]");
  require((1000 * M) % d == 0, "d must divide 1000*M");
  const auto n = static_cast<std::int32_t>(d) + 1;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<Weight> weight(static_cast<std::size_t>(n), 1000 * M / d);
  std::vector<Budget> budget(static_cast<std::size_t>(n), M);
  weight[0] = 1000;
  budget[0] = 1;
  for (std::int32_t leaf = 1; leaf < n; ++leaf) {
    edges.emplace_back(0, static_cast<VertexId>(leaf));
  }
  return make_instance(n, edges, std::move(weight), std::move(budget),
                       static_cast<Budget>(d) * M);
}

LeveledPlanarInstance gen_simply_nested(Rng& rng,
                                        const std::vector<std::int32_t>& sizes,
                                        int spoke_permille, Weight wmax_units,
                                        Budget bmax, Budget B) {
  check_common(0, wmax_units, bmax, B);
  require(!sizes.empty(), "need at least one level");
  require(spoke_permille >= 1 && spoke_permille <= 1000,
          "spoke rate must lie in [1, 1000]");
  std::int64_t total = 0;
  for (const std::int32_t q : sizes) {
    require(q >= 3, "every level needs at least three vertices");
    total += q;
  }
  require(total <= 100'000, "instance too large");
  const auto n = static_cast<std::int32_t>(total);

  std::vector<std::vector<VertexId>> levels;
  VertexId base = 0;
  for (const std::int32_t q : sizes) {
    std::vector<VertexId> level(static_cast<std::size_t>(q));
    std::iota(level.begin(), level.end(), base);
    base += q;
    levels.push_back(std::move(level));
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& level : levels) {
    for (std::size_t p = 0; p < level.size(); ++p) {
      edges.emplace_back(level[p], level[(p + 1) % level.size()]);
    }
  }
  for (std::size_t li = 0; li + 1 < levels.size(); ++li) {
    const auto& outer = levels[li];
    const auto& inner = levels[li + 1];
    const auto qo = static_cast<std::int64_t>(outer.size());
    const auto qi = static_cast<std::int64_t>(inner.size());
    // Monotone merge walk from (0, 0) to (qo-1, qi-1); positions never
    // wrap, so the spokes form a staircase that unrolls without crossings.
    std::set<std::pair<std::int64_t, std::int64_t>> walk;
    std::int64_t co = 0;
    std::int64_t ci = 0;
    walk.emplace(0, 0);
    while (co < qo - 1 || ci < qi - 1) {
      bool move_outer;
      if (co == qo - 1) {
        move_outer = false;
      } else if (ci == qi - 1) {
        move_outer = true;
      } else {
        move_outer = rng.bounded(2) == 0;
      }
      if (move_outer) {
        ++co;
      } else {
        ++ci;
      }
      walk.emplace(co, ci);
    }
    std::vector<std::pair<VertexId, VertexId>> spokes;
    for (const auto& [o, i] : walk) {
      if (rng.bounded(1000) < static_cast<std::uint64_t>(spoke_permille)) {
        spokes.emplace_back(outer[static_cast<std::size_t>(o)],
                            inner[static_cast<std::size_t>(i)]);
      }
    }
    if (spokes.empty()) {
      const auto& [o, i] = *walk.begin();
      spokes.emplace_back(outer[static_cast<std::size_t>(o)],
                          inner[static_cast<std::size_t>(i)]);
    }
    edges.insert(edges.end(), spokes.begin(), spokes.end());
  }

  Instance inst = assemble(rng, n, edges, wmax_units, bmax, B);
  return validate_leveled(std::move(inst), std::move(levels));
}

KnapsackInstance gen_knapsack(Rng& rng, std::int32_t n, std::int64_t capacity,
                              std::int64_t vmax_units, std::int64_t smax) {
  require(n >= 0, "item count must be >= 0");
  require(capacity >= 0, "capacity must be >= 0");
  require(vmax_units >= 0 && vmax_units <= kMaxUnits,
          "vmax must lie in [0, 1e12]");
  require(smax >= 1, "smax must be >= 1");
  KnapsackInstance kp;
  kp.capacity = capacity;
  kp.items.reserve(static_cast<std::size_t>(n));
  for (std::int32_t i = 0; i < n; ++i) {
    KnapsackItem item;
    item.value = 1000 * rng.range(0, vmax_units);
    item.size = rng.range(1, smax);
    kp.items.push_back(item);
  }
  return kp;
}

}  // namespace mwbis
