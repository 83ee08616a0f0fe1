#include "mwbis/planar.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <string>
#include <utility>

#include "mwbis/errors.hpp"

namespace mwbis {

namespace {

constexpr long long kPlanarGuard = 100'000'000;

using TablePtr = std::shared_ptr<const SliceTable>;

struct CrossEdge {
  int outer_pos = 0;
  int inner_pos = 0;
};

// Smallest rotation of the inner cycle such that, after rotating, the
// edges sorted by (outer, inner) have nondecreasing inner positions; the
// outer cut is kept fixed, which loses no generality for a drawable pair.
std::optional<int> smallest_unrolling_rotation(int inner_size,
                                               std::vector<CrossEdge> edges) {
  if (edges.empty()) return 0;
  for (int r = 0; r < inner_size; ++r) {
    std::vector<std::pair<int, int>> rel;
    rel.reserve(edges.size());
    for (const CrossEdge& e : edges) {
      rel.emplace_back(e.outer_pos,
                       (e.inner_pos - r + inner_size) % inner_size);
    }
    std::sort(rel.begin(), rel.end());
    bool ok = true;
    for (std::size_t i = 1; i < rel.size(); ++i) {
      if (rel[i].second < rel[i - 1].second) {
        ok = false;
        break;
      }
    }
    if (ok) return r;
  }
  return std::nullopt;
}

std::vector<VertexId> rotated(const std::vector<VertexId>& seq, int r) {
  std::vector<VertexId> out;
  out.reserve(seq.size());
  for (std::size_t j = 0; j < seq.size(); ++j) {
    out.push_back(seq[(static_cast<std::size_t>(r) + j) % seq.size()]);
  }
  return out;
}

std::shared_ptr<SliceTable> blank_table(SliceTable::Kind kind, int bits,
                                        Budget B,
                                        std::vector<VertexId> first_chain,
                                        std::vector<VertexId> second_chain) {
  auto t = std::make_shared<SliceTable>();
  t->kind = kind;
  t->bits = bits;
  t->B = B;
  t->first_chain = std::move(first_chain);
  t->second_chain = std::move(second_chain);
  const std::size_t span = (std::size_t{1} << (2 * bits)) *
                           (static_cast<std::size_t>(B) + 1);
  t->valid.assign(span, 0);
  t->value.assign(span, 0);
  return t;
}

TablePtr make_base(const Instance& inst, VertexId u, VertexId v, Budget B) {
  auto t = blank_table(SliceTable::Kind::Base, 1, B, {u}, {v});
  const Weight wv = inst.weight[static_cast<std::size_t>(v)];
  const Budget bv = inst.budget[static_cast<std::size_t>(v)];
  for (std::uint32_t a = 0; a < 2; ++a) {
    for (std::uint32_t b = 0; b < 2; ++b) {
      if (a && b) continue;  // face edge (u, v)
      for (Budget q = 0; q <= B; ++q) {
        if (b && q < bv) continue;
        const std::size_t i = t->index(a, b, q);
        t->valid[i] = 1;
        t->value[i] = b ? wv : 0;
      }
    }
  }
  return t;
}

TablePtr make_trivial(const std::vector<VertexId>& chain, Budget B) {
  auto t = blank_table(SliceTable::Kind::Trivial,
                       static_cast<int>(chain.size()), B, chain, chain);
  const std::uint32_t S = std::uint32_t{1} << t->bits;
  for (std::uint32_t a = 0; a < S; ++a) {
    for (Budget q = 0; q <= B; ++q) {
      t->valid[t->index(a, a, q)] = 1;
    }
  }
  return t;
}

// skip_selected_mid drops shared combinations whose own-level vertex is
// selected; the caller sets it when that vertex conflicts with a vertex
// being added two calls up the pipeline.
TablePtr merge_impl(const TablePtr& left, const TablePtr& right,
                    bool skip_selected_mid) {
  if (left->second_chain != right->first_chain) {
    throw SolverError(ErrorCode::BoundaryMismatch,
                      "shared boundary chains differ");
  }
  assert(left->B == right->B);
  const Budget B = left->B;
  const int bits = left->bits;
  const std::uint32_t S = std::uint32_t{1} << bits;
  auto out = blank_table(SliceTable::Kind::Merge, bits, B, left->first_chain,
                         right->second_chain);
  out->left = left;
  out->right = right;
  out->bp.assign(out->valid.size(), {});

  for (std::uint32_t a = 0; a < S; ++a) {
    for (std::uint32_t c = 0; c < S; ++c) {
      for (std::uint32_t b = 0; b < S; ++b) {
        if (skip_selected_mid && (b & 1u)) continue;
        // Valid entries form an up-set in q; find each side's threshold.
        Budget t1min = -1;
        for (Budget q = 0; q <= B; ++q) {
          if (left->entry_valid(a, b, q)) {
            t1min = q;
            break;
          }
        }
        if (t1min < 0) continue;
        Budget t2min = -1;
        for (Budget q = 0; q <= B; ++q) {
          if (right->entry_valid(b, c, q)) {
            t2min = q;
            break;
          }
        }
        if (t2min < 0 || t1min + t2min > B) continue;

        const Budget p = B - t1min - t2min;
        std::vector<Weight> g1(static_cast<std::size_t>(B - t1min) + 1);
        for (Budget s = 0; s + t1min <= B; ++s) {
          g1[static_cast<std::size_t>(s)] = left->entry_value(a, b, t1min + s);
        }
        std::vector<Weight> g2(static_cast<std::size_t>(B - t2min) + 1);
        for (Budget s = 0; s + t2min <= B; ++s) {
          g2[static_cast<std::size_t>(s)] = right->entry_value(b, c, t2min + s);
        }
        std::vector<ValueProfile> profiles;
        profiles.push_back(make_profile(std::move(g1)));
        profiles.push_back(make_profile(std::move(g2)));
        const AllocTable shares = alloc_table(profiles, p);

        for (Budget q = t1min + t2min; q <= B; ++q) {
          const std::size_t s = static_cast<std::size_t>(q - t1min - t2min);
          const Weight cand = shares.best[s];
          const std::size_t i = out->index(a, c, q);
          if (!out->valid[i] || cand > out->value[i]) {
            out->valid[i] = 1;
            out->value[i] = cand;
            const Budget s1 = shares.choice[0][s];
            const Budget s2 =
                shares.choice[1][static_cast<std::size_t>(s - s1)];
            out->bp[i] = {b, t1min + s1, t2min + s2};
          }
        }
      }
    }
  }
  return out;
}

TablePtr filter_impl(const TablePtr& t, bool diagonal_only,
                     bool kill_first_selected, bool kill_second_selected) {
  if (!diagonal_only && !kill_first_selected && !kill_second_selected) {
    return t;
  }
  auto out = blank_table(SliceTable::Kind::Filter, t->bits, t->B,
                         t->first_chain, t->second_chain);
  out->inner = t;
  const std::uint32_t S = std::uint32_t{1} << t->bits;
  for (std::uint32_t a = 0; a < S; ++a) {
    for (std::uint32_t b = 0; b < S; ++b) {
      if (diagonal_only && a != b) continue;
      if (kill_first_selected && (a & 1u)) continue;
      if (kill_second_selected && (b & 1u)) continue;
      for (Budget q = 0; q <= t->B; ++q) {
        const std::size_t i = t->index(a, b, q);
        out->valid[i] = t->valid[i];
        out->value[i] = t->value[i];
      }
    }
  }
  return out;
}

// Region folds for the three (u selected, v selected) combinations that an
// extension can pass through; (1,1) dies on the face edge regardless.
std::array<TablePtr, 3> fold_region(const Instance& inst,
                                    std::span<const TablePtr> region,
                                    const std::vector<VertexId>& empty_chain,
                                    VertexId u, VertexId v, bool full_circle,
                                    Budget B) {
  std::array<TablePtr, 3> out;
  constexpr bool kU[3] = {false, true, false};
  constexpr bool kV[3] = {false, false, true};
  for (int variant = 0; variant < 3; ++variant) {
    const bool ub = kU[variant];
    const bool vb = kV[variant];
    TablePtr cur;
    if (region.empty()) {
      cur = make_trivial(empty_chain, B);
    } else {
      cur = region[0];
      for (std::size_t s = 1; s < region.size(); ++s) {
        const VertexId top = region[s]->first_chain[0];
        const bool blocked = (ub && has_edge(inst, u, top)) ||
                             (vb && has_edge(inst, v, top));
        cur = merge_impl(cur, region[s], blocked);
      }
    }
    const bool kf = (ub && has_edge(inst, u, cur->first_chain[0])) ||
                    (vb && has_edge(inst, v, cur->first_chain[0]));
    const bool ks = (ub && has_edge(inst, u, cur->second_chain[0])) ||
                    (vb && has_edge(inst, v, cur->second_chain[0]));
    out[static_cast<std::size_t>(variant)] =
        filter_impl(cur, full_circle, kf, ks);
  }
  return out;
}

TablePtr extend_impl(const Instance& inst, std::array<TablePtr, 3> folds,
                     VertexId u, VertexId v) {
  const SliceTable& base = *folds[0];
  const Budget B = base.B;
  const int base_bits = base.bits;
  std::vector<VertexId> first{u};
  first.insert(first.end(), base.first_chain.begin(), base.first_chain.end());
  std::vector<VertexId> second{v};
  second.insert(second.end(), base.second_chain.begin(),
                base.second_chain.end());
  auto out = blank_table(SliceTable::Kind::Extend, base_bits + 1, B,
                         std::move(first), std::move(second));
  out->folds = std::move(folds);
  out->ext_v = v;
  out->ext_v_weight = inst.weight[static_cast<std::size_t>(v)];
  out->ext_v_budget = inst.budget[static_cast<std::size_t>(v)];

  const std::uint32_t Sc = std::uint32_t{1} << base_bits;
  constexpr std::uint32_t kUb[3] = {0, 1, 0};
  constexpr std::uint32_t kVb[3] = {0, 0, 1};
  for (int variant = 0; variant < 3; ++variant) {
    const TablePtr& f = out->folds[static_cast<std::size_t>(variant)];
    const std::uint32_t ub = kUb[variant];
    const std::uint32_t vb = kVb[variant];
    for (std::uint32_t ac = 0; ac < Sc; ++ac) {
      for (std::uint32_t bc = 0; bc < Sc; ++bc) {
        const std::uint32_t a = (ac << 1) | ub;
        const std::uint32_t b = (bc << 1) | vb;
        for (Budget q = 0; q <= B; ++q) {
          const Budget qc = q - (vb ? out->ext_v_budget : 0);
          if (qc < 0 || !f->entry_valid(ac, bc, qc)) continue;
          const std::size_t i = out->index(a, b, q);
          out->valid[i] = 1;
          out->value[i] =
              f->entry_value(ac, bc, qc) + (vb ? out->ext_v_weight : 0);
        }
      }
    }
  }
  return out;
}

bool band_guard_ok(int L, Budget B, long long total_slices) {
  if (L >= 16 || B < 0 || B > kPlanarGuard) return false;
  const long long per_slice = (1LL << (2 * L)) * (B + 1);
  return per_slice <= kPlanarGuard / std::max(total_slices, 1LL);
}

}  // namespace

std::size_t SliceTable::index(std::uint32_t a, std::uint32_t b,
                              Budget q) const {
  const std::size_t S = std::size_t{1} << bits;
  return (static_cast<std::size_t>(a) * S + b) *
             (static_cast<std::size_t>(B) + 1) +
         static_cast<std::size_t>(q);
}

bool SliceTable::entry_valid(std::uint32_t a, std::uint32_t b,
                             Budget q) const {
  if (q < 0 || q > B) return false;
  return valid[index(a, b, q)] != 0;
}

Weight SliceTable::entry_value(std::uint32_t a, std::uint32_t b,
                               Budget q) const {
  return value[index(a, b, q)];
}

void collect_witness(const SliceTable& table, std::uint32_t a, std::uint32_t b,
                     Budget q, std::vector<VertexId>& out) {
  assert(table.entry_valid(a, b, q));
  switch (table.kind) {
    case SliceTable::Kind::Base:
      if (b & 1u) out.push_back(table.second_chain[0]);
      return;
    case SliceTable::Kind::Trivial:
      return;
    case SliceTable::Kind::Filter:
      collect_witness(*table.inner, a, b, q, out);
      return;
    case SliceTable::Kind::Merge: {
      const SliceTable::MergeBp& bp = table.bp[table.index(a, b, q)];
      collect_witness(*table.left, a, bp.mid, bp.t1, out);
      collect_witness(*table.right, bp.mid, b, bp.t2, out);
      return;
    }
    case SliceTable::Kind::Extend: {
      const std::uint32_t ub = a & 1u;
      const std::uint32_t vb = b & 1u;
      assert(!(ub && vb));
      if (vb) out.push_back(table.ext_v);
      const std::size_t variant = ub ? 1 : (vb ? 2 : 0);
      collect_witness(*table.folds[variant], a >> 1, b >> 1,
                      q - (vb ? table.ext_v_budget : 0), out);
      return;
    }
  }
}

std::shared_ptr<const SliceTable> base_table(const Instance& inst, VertexId u,
                                             VertexId v, Budget B) {
  return make_base(inst, u, v, B);
}

std::shared_ptr<const SliceTable> merge_tables(
    std::shared_ptr<const SliceTable> left,
    std::shared_ptr<const SliceTable> right) {
  return merge_impl(left, right, false);
}

std::shared_ptr<const SliceTable> extend_table(
    const Instance& inst, std::shared_ptr<const SliceTable> region,
    VertexId u, VertexId v) {
  const bool full_circle = region->first_chain == region->second_chain &&
                           region->kind != SliceTable::Kind::Trivial;
  std::array<TablePtr, 3> folds;
  constexpr bool kU[3] = {false, true, false};
  constexpr bool kV[3] = {false, false, true};
  for (int variant = 0; variant < 3; ++variant) {
    const bool ub = kU[variant];
    const bool vb = kV[variant];
    const bool kf = (ub && has_edge(inst, u, region->first_chain[0])) ||
                    (vb && has_edge(inst, v, region->first_chain[0]));
    const bool ks = (ub && has_edge(inst, u, region->second_chain[0])) ||
                    (vb && has_edge(inst, v, region->second_chain[0]));
    folds[static_cast<std::size_t>(variant)] =
        filter_impl(region, full_circle, kf, ks);
  }
  return extend_impl(inst, std::move(folds), u, v);
}

LeveledPlanarInstance validate_leveled(
    Instance inst, std::vector<std::vector<VertexId>> levels) {
  validate_instance(inst);
  const std::size_t n = static_cast<std::size_t>(inst.n);
  std::vector<std::int32_t> level_of(n, 0);
  std::vector<std::int32_t> pos_of(n, -1);
  for (std::size_t li = 0; li < levels.size(); ++li) {
    for (std::size_t p = 0; p < levels[li].size(); ++p) {
      const VertexId v = levels[li][p];
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw ValidationError(ErrorCode::VertexOutOfRange,
                              "level " + std::to_string(li + 1));
      }
      if (level_of[static_cast<std::size_t>(v)] != 0) {
        throw ValidationError(ErrorCode::MultiFaceLevel,
                              "vertex " + std::to_string(v) +
                                  " listed more than once");
      }
      level_of[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(li) + 1;
      pos_of[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(p);
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (level_of[v] == 0) {
      throw ValidationError(ErrorCode::MultiFaceLevel,
                            "vertex " + std::to_string(v) + " in no level");
    }
  }
  for (std::size_t li = 0; li < levels.size(); ++li) {
    if (levels[li].size() < 3) {
      throw ValidationError(ErrorCode::DegenerateLevel,
                            "level " + std::to_string(li + 1) + " has " +
                                std::to_string(levels[li].size()) +
                                " vertices");
    }
    const std::size_t q = levels[li].size();
    for (std::size_t p = 0; p < q; ++p) {
      const VertexId u = levels[li][p];
      const VertexId v = levels[li][(p + 1) % q];
      if (!has_edge(inst, u, v)) {
        throw ValidationError(ErrorCode::MultiFaceLevel,
                              "missing face edge " + std::to_string(u) + "-" +
                                  std::to_string(v));
      }
    }
  }
  for (const auto& [u, v] : edge_list(inst)) {
    const std::int32_t lu = level_of[static_cast<std::size_t>(u)];
    const std::int32_t lv = level_of[static_cast<std::size_t>(v)];
    const std::int32_t gap = lu > lv ? lu - lv : lv - lu;
    if (gap >= 2) {
      throw ValidationError(ErrorCode::NonConsecutiveLevelEdge,
                            std::to_string(u) + "-" + std::to_string(v));
    }
    if (gap == 0) {
      const std::size_t q = levels[static_cast<std::size_t>(lu) - 1].size();
      const std::int32_t pu = pos_of[static_cast<std::size_t>(u)];
      const std::int32_t pv = pos_of[static_cast<std::size_t>(v)];
      const std::size_t d =
          static_cast<std::size_t>(((pu - pv) % static_cast<std::int32_t>(q) +
                                    static_cast<std::int32_t>(q)) %
                                   static_cast<std::int32_t>(q));
      if (d != 1 && d != q - 1) {
        throw ValidationError(ErrorCode::MultiFaceLevel,
                              "chord " + std::to_string(u) + "-" +
                                  std::to_string(v));
      }
    }
  }
  for (std::size_t li = 0; li + 1 < levels.size(); ++li) {
    std::vector<CrossEdge> cross;
    for (std::size_t p = 0; p < levels[li].size(); ++p) {
      const VertexId u = levels[li][p];
      for (VertexId v : inst.adj[static_cast<std::size_t>(u)]) {
        if (level_of[static_cast<std::size_t>(v)] ==
            static_cast<std::int32_t>(li) + 2) {
          cross.push_back({static_cast<int>(p),
                           pos_of[static_cast<std::size_t>(v)]});
        }
      }
    }
    if (!smallest_unrolling_rotation(static_cast<int>(levels[li + 1].size()),
                                     std::move(cross))) {
      throw ValidationError(ErrorCode::CrossingCrossEdges,
                            "levels " + std::to_string(li + 1) + "/" +
                                std::to_string(li + 2));
    }
  }
  LeveledPlanarInstance lp;
  lp.instance = std::move(inst);
  lp.levels = std::move(levels);
  lp.level_of = std::move(level_of);
  return lp;
}

std::vector<Band> layer_decompose(const LeveledPlanarInstance& lp, int k,
                                  int r) {
  if (k < 1) {
    throw ValidationError(ErrorCode::BadParams, "k = " + std::to_string(k));
  }
  if (r < 0 || r > k) {
    throw ValidationError(ErrorCode::BadParams, "r = " + std::to_string(r));
  }
  const std::size_t L = lp.levels.size();
  std::vector<char> cross_below(L, 0);  // level li has an edge to li+1
  for (const auto& [u, v] : edge_list(lp.instance)) {
    const std::int32_t lu = lp.level_of[static_cast<std::size_t>(u)];
    const std::int32_t lv = lp.level_of[static_cast<std::size_t>(v)];
    if (lv == lu + 1) cross_below[static_cast<std::size_t>(lu) - 1] = 1;
    if (lu == lv + 1) cross_below[static_cast<std::size_t>(lv) - 1] = 1;
  }

  std::vector<Band> bands;
  std::vector<std::size_t> run;
  const auto flush = [&]() {
    if (run.empty()) return;
    std::vector<VertexId> verts;
    for (std::size_t li : run) {
      verts.insert(verts.end(), lp.levels[li].begin(), lp.levels[li].end());
    }
    std::vector<VertexId> map;
    Instance sub = induced_subgraph(lp.instance, verts, &map);
    std::vector<std::int32_t> local_of(
        static_cast<std::size_t>(lp.instance.n), -1);
    for (std::size_t i = 0; i < map.size(); ++i) {
      local_of[static_cast<std::size_t>(map[i])] = static_cast<std::int32_t>(i);
    }
    Band band;
    for (std::size_t li : run) {
      std::vector<VertexId> local;
      local.reserve(lp.levels[li].size());
      for (VertexId v : lp.levels[li]) {
        local.push_back(local_of[static_cast<std::size_t>(v)]);
      }
      band.leveled.levels.push_back(std::move(local));
      band.original_levels.push_back(static_cast<std::int32_t>(li) + 1);
    }
    band.leveled =
        validate_leveled(std::move(sub), std::move(band.leveled.levels));
    band.original_ids = std::move(map);
    bands.push_back(std::move(band));
    run.clear();
  };

  for (std::size_t li = 0; li < L; ++li) {
    const int level_number = static_cast<int>(li) + 1;
    if (level_number % (k + 1) == r) {
      flush();
      continue;
    }
    if (!run.empty()) {
      const std::size_t prev = run.back();
      if (prev + 1 != li || !cross_below[prev]) flush();
    }
    run.push_back(li);
  }
  flush();
  return bands;
}

SliceDecomposition build_slices(const LeveledPlanarInstance& band) {
  const Instance& inst = band.instance;
  const Budget B = inst.B;
  const std::size_t L = band.levels.size();
  SliceDecomposition dec;
  if (L == 0) return dec;

  long long total_slices = 0;
  for (const auto& level : band.levels) {
    total_slices += static_cast<long long>(level.size());
  }
  if (!band_guard_ok(static_cast<int>(L), B, total_slices)) {
    throw SolverError(ErrorCode::BudgetGuardExceeded,
                      std::to_string(L) + " levels, " +
                          std::to_string(total_slices) + " slices, B = " +
                          std::to_string(B));
  }

  dec.frames.push_back(band.levels[0]);
  for (std::size_t li = 1; li < L; ++li) {
    std::vector<std::int32_t> outer_pos(static_cast<std::size_t>(inst.n), -1);
    for (std::size_t p = 0; p < dec.frames[li - 1].size(); ++p) {
      outer_pos[static_cast<std::size_t>(dec.frames[li - 1][p])] =
          static_cast<std::int32_t>(p);
    }
    std::vector<CrossEdge> cross;
    for (std::size_t p = 0; p < band.levels[li].size(); ++p) {
      const VertexId x = band.levels[li][p];
      for (VertexId nb : inst.adj[static_cast<std::size_t>(x)]) {
        if (band.level_of[static_cast<std::size_t>(nb)] ==
            static_cast<std::int32_t>(li)) {
          cross.push_back({outer_pos[static_cast<std::size_t>(nb)],
                           static_cast<int>(p)});
        }
      }
    }
    const auto rot = smallest_unrolling_rotation(
        static_cast<int>(band.levels[li].size()), std::move(cross));
    assert(rot.has_value());  // guaranteed by validate_leveled
    dec.frames.push_back(rotated(band.levels[li], *rot));
  }

  dec.anchors.resize(L);
  dec.levels.resize(L);

  const auto& frame1 = dec.frames[0];
  const std::size_t q1 = frame1.size();
  for (std::size_t j = 0; j < q1; ++j) {
    SliceInfo info;
    info.u = frame1[j];
    info.v = frame1[(j + 1) % q1];
    info.first_boundary = {info.u};
    info.second_boundary = {info.v};
    info.table = make_base(inst, info.u, info.v, B);
    dec.levels[0].push_back(std::move(info));
  }

  for (std::size_t li = 1; li < L; ++li) {
    const auto& outer = dec.frames[li - 1];
    const auto& inner = dec.frames[li];
    const std::size_t qo = outer.size();
    const std::size_t qi = inner.size();
    std::vector<std::int32_t> outer_pos(static_cast<std::size_t>(inst.n), -1);
    for (std::size_t p = 0; p < qo; ++p) {
      outer_pos[static_cast<std::size_t>(outer[p])] =
          static_cast<std::int32_t>(p);
    }

    std::vector<std::vector<std::int32_t>> spokes(qi);
    for (std::size_t p = 0; p < qi; ++p) {
      for (VertexId nb : inst.adj[static_cast<std::size_t>(inner[p])]) {
        if (band.level_of[static_cast<std::size_t>(nb)] ==
            static_cast<std::int32_t>(li)) {
          spokes[p].push_back(outer_pos[static_cast<std::size_t>(nb)]);
        }
      }
      std::sort(spokes[p].begin(), spokes[p].end());
    }

    std::size_t s = qi;
    for (std::size_t p = 0; p < qi; ++p) {
      if (!spokes[p].empty()) {
        s = p;
        break;
      }
    }
    if (s == qi) {
      throw ValidationError(ErrorCode::BadParams,
                            "no cross edges into level " +
                                std::to_string(li + 1) + "; not a band");
    }

    // Fans unroll monotonically in frame coordinates shifted so that the
    // first spoked vertex's first spoke sits at 0.
    const std::int32_t shift = spokes[s].front();
    const auto unrolled = [&](std::int32_t p) {
      return static_cast<std::size_t>(
          ((p - shift) % static_cast<std::int32_t>(qo) +
           static_cast<std::int32_t>(qo)) %
          static_cast<std::int32_t>(qo));
    };

    std::vector<std::int32_t> anchor_pos(qi, -1);
    dec.anchors[li].assign(qi, -1);
    std::int32_t cursor = spokes[s].front();
    for (std::size_t step = 0; step < qi; ++step) {
      const std::size_t p = (s + step) % qi;
      if (!spokes[p].empty()) {
        anchor_pos[p] = spokes[p].front();
        cursor = spokes[p].back();
      } else {
        anchor_pos[p] = cursor;
      }
      dec.anchors[li][p] = outer[static_cast<std::size_t>(anchor_pos[p])];
    }

    dec.levels[li].resize(qi);
    std::size_t arc_total = 0;
    for (std::size_t step = 0; step < qi; ++step) {
      const std::size_t j = (s + step) % qi;
      const std::size_t jn = (j + 1) % qi;
      std::size_t arc_len;
      if (step + 1 < qi) {
        arc_len = unrolled(anchor_pos[jn]) - unrolled(anchor_pos[j]);
      } else {
        arc_len = qo - unrolled(anchor_pos[j]);
      }
      arc_total += arc_len;

      std::vector<TablePtr> region;
      region.reserve(arc_len);
      for (std::size_t t = 0; t < arc_len; ++t) {
        const std::size_t pos =
            (static_cast<std::size_t>(anchor_pos[j]) + t) % qo;
        region.push_back(dec.levels[li - 1][pos].table);
      }
      const std::vector<VertexId>& anchor_chain =
          dec.levels[li - 1][static_cast<std::size_t>(anchor_pos[j])]
              .first_boundary;

      const VertexId u = inner[j];
      const VertexId v = inner[jn];
      auto folds = fold_region(inst, region, anchor_chain, u, v,
                               arc_len == qo, B);
      SliceInfo info;
      info.u = u;
      info.v = v;
      info.table = extend_impl(inst, std::move(folds), u, v);
      info.first_boundary = info.table->first_chain;
      info.second_boundary = info.table->second_chain;
      dec.levels[li][j] = std::move(info);
    }
    assert(arc_total == qo);
    (void)arc_total;
  }
  return dec;
}

Solution BandResult::solution_at(Budget q) const {
  if (!closed) return make_solution(instance, {});
  if (q < 0) q = 0;
  if (q > closed->B) q = closed->B;
  const std::uint32_t S = std::uint32_t{1} << closed->bits;
  std::uint32_t best_a = 0;
  Weight best = -1;
  for (std::uint32_t a = 0; a < S; ++a) {
    if (!closed->entry_valid(a, a, q)) continue;
    if (closed->entry_value(a, a, q) > best) {
      best = closed->entry_value(a, a, q);
      best_a = a;
    }
  }
  std::vector<VertexId> verts;
  collect_witness(*closed, best_a, best_a, q, verts);
  return make_solution(instance, verts);
}

BandResult solve_band(const LeveledPlanarInstance& band, Budget B) {
  if (B < 0) {
    throw ValidationError(ErrorCode::BadParams, "negative budget");
  }
  BandResult result;
  result.instance = band.instance;
  result.instance.B = B;
  if (band.levels.empty()) {
    result.profile =
        make_profile(std::vector<Weight>(static_cast<std::size_t>(B) + 1, 0));
    return result;
  }
  LeveledPlanarInstance local = band;
  local.instance.B = B;
  const SliceDecomposition dec = build_slices(local);
  const auto& top = dec.levels.back();
  TablePtr fold = top[0].table;
  for (std::size_t j = 1; j < top.size(); ++j) {
    fold = merge_impl(fold, top[j].table, false);
  }
  result.closed = filter_impl(fold, true, false, false);

  std::vector<Weight> best(static_cast<std::size_t>(B) + 1, 0);
  const std::uint32_t S = std::uint32_t{1} << result.closed->bits;
  for (Budget q = 0; q <= B; ++q) {
    Weight w = 0;
    for (std::uint32_t a = 0; a < S; ++a) {
      if (result.closed->entry_valid(a, a, q)) {
        w = std::max(w, result.closed->entry_value(a, a, q));
      }
    }
    best[static_cast<std::size_t>(q)] = w;
  }
  result.profile = make_profile(std::move(best));
  return result;
}

Solution ptas(const LeveledPlanarInstance& lp, int k, Budget B) {
  if (k < 1) {
    throw ValidationError(ErrorCode::BadParams, "k = " + std::to_string(k));
  }
  Solution best;
  bool have = false;
  for (int r = 0; r <= k; ++r) {
    const std::vector<Band> bands = layer_decompose(lp, k, r);
    std::vector<BandResult> results;
    std::vector<ValueProfile> profiles;
    results.reserve(bands.size());
    for (const Band& band : bands) {
      results.push_back(solve_band(band.leveled, B));
      profiles.push_back(results.back().profile);
    }
    const AllocResult shares = alloc(profiles, B);
    std::vector<VertexId> verts;
    for (std::size_t i = 0; i < bands.size(); ++i) {
      const Budget share = shares.allocation.empty() ? 0 : shares.allocation[i];
      const Solution local = results[i].solution_at(share);
      for (VertexId v : local.vertices) {
        verts.push_back(bands[i].original_ids[static_cast<std::size_t>(v)]);
      }
    }
    Solution cand = make_solution(lp.instance, verts);
    if (!have || better_solution(cand, best)) {
      best = std::move(cand);
      have = true;
    }
  }
  return best;
}

}  // namespace mwbis
