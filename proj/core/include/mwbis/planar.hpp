#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "mwbis/alloc.hpp"
#include "mwbis/instance.hpp"

namespace mwbis {

// Concentric-cycle embedding: levels[0] is the outermost cycle (level 1),
// each level a cyclic vertex order. Consecutive pairs within a level are
// face edges; every other edge joins consecutive levels and the cross
// edges between any two consecutive levels are mutually non-crossing.
struct LeveledPlanarInstance {
  Instance instance;
  std::vector<std::vector<VertexId>> levels;
  std::vector<std::int32_t> level_of;  // 1-based level per vertex
  bool operator==(const LeveledPlanarInstance&) const = default;
};

// Checks every structural invariant. Throws MultiFaceLevel (vertex in no
// or several levels, missing face edge, intra-level chord), DegenerateLevel
// (level smaller than 3), NonConsecutiveLevelEdge, CrossingCrossEdges.
LeveledPlanarInstance validate_leveled(Instance inst,
                                       std::vector<std::vector<VertexId>> levels);

struct Band {
  LeveledPlanarInstance leveled;               // vertices relabeled 0..n-1
  std::vector<VertexId> original_ids;          // local -> original vertex
  std::vector<std::int32_t> original_levels;   // band level t -> original level
};

// Deletes every level congruent to r mod (k+1) (levels numbered from 1)
// and returns the connected runs that remain, outermost level first,
// splitting runs wherever consecutive levels share no cross edge.
std::vector<Band> layer_decompose(const LeveledPlanarInstance& lp, int k, int r);

// DP table of one slice: entry (a, b, q) is the best weight of a selection
// charged inside the slice, where bit p of a / b picks the vertex at chain
// position p of the first / second boundary (chain[0] = the slice's
// own-level vertex) and the charged budget is at most q.
struct SliceTable {
  enum class Kind { Base, Trivial, Merge, Extend, Filter };

  Kind kind = Kind::Base;
  int bits = 0;  // chain length
  Budget B = 0;
  std::vector<VertexId> first_chain;
  std::vector<VertexId> second_chain;
  std::vector<char> valid;   // (a * 2^bits + b) * (B+1) + q
  std::vector<Weight> value;

  // Merge
  struct MergeBp {
    std::uint32_t mid = 0;
    Budget t1 = 0;
    Budget t2 = 0;
  };
  std::shared_ptr<const SliceTable> left, right;
  std::vector<MergeBp> bp;

  // Extend: folds for (u,v) selection combinations 00, 10, 01
  std::array<std::shared_ptr<const SliceTable>, 3> folds;
  VertexId ext_v = -1;
  Weight ext_v_weight = 0;
  Budget ext_v_budget = 0;

  // Filter
  std::shared_ptr<const SliceTable> inner;

  std::size_t index(std::uint32_t a, std::uint32_t b, Budget q) const;
  bool entry_valid(std::uint32_t a, std::uint32_t b, Budget q) const;
  Weight entry_value(std::uint32_t a, std::uint32_t b, Budget q) const;
};

// Appends every vertex charged inside the table that entry (a, b, q)
// selected; each band vertex is charged in exactly one slice, so walking
// a closed table yields the full selection once.
void collect_witness(const SliceTable& table, std::uint32_t a, std::uint32_t b,
                     Budget q, std::vector<VertexId>& out);

// Single-edge slice table for face edge (u, v): 1-bit chains {u} and {v}.
// Selecting v charges its weight and budget here; u is never charged;
// selecting both ends is invalid (face edge).
std::shared_ptr<const SliceTable> base_table(const Instance& inst, VertexId u,
                                             VertexId v, Budget B);

// Joins two slices sharing a boundary: entry (a, c, q) maximizes over the
// shared combination b and over budget splits between the sides. Throws
// BoundaryMismatch unless left's second chain equals right's first chain.
std::shared_ptr<const SliceTable> merge_tables(
    std::shared_ptr<const SliceTable> left,
    std::shared_ptr<const SliceTable> right);

// Adds face edge (u, v) on top of a folded region whose end boundaries
// descend from u's and v's anchors. Selecting v charges its weight and
// budget here; selecting both ends is invalid (face edge); selections
// conflicting with the fold's end boundary tops are filtered out.
// Precondition: neither u nor v has a neighbor strictly inside the region
// (the band pipeline enforces interior conflicts during its own folds).
std::shared_ptr<const SliceTable> extend_table(
    const Instance& inst, std::shared_ptr<const SliceTable> region,
    VertexId u, VertexId v);

struct SliceInfo {
  VertexId u = -1;  // owning face edge (u, v)
  VertexId v = -1;
  std::vector<VertexId> first_boundary;   // chain, [0] = own-level vertex
  std::vector<VertexId> second_boundary;
  std::shared_ptr<const SliceTable> table;
};

struct SliceDecomposition {
  std::vector<std::vector<VertexId>> frames;   // rotated cyclic orders
  std::vector<std::vector<VertexId>> anchors;  // per level >= 2, per frame pos
  std::vector<std::vector<SliceInfo>> levels;  // levels[t-1] = level-t slices
};

// Builds frames, anchors, and every slice table of the band, outermost
// level inward, using band.instance.B as the budget cap. Throws
// DegenerateLevel and BudgetGuardExceeded (4^L * (B+1) * slices > 1e8).
SliceDecomposition build_slices(const LeveledPlanarInstance& band);

struct BandResult {
  ValueProfile profile;                       // best weight per budget 0..B
  std::shared_ptr<const SliceTable> closed;   // full fold, equal boundaries
  Instance instance;

  // Retrieves a witness for the profile value at budget q (smallest
  // maximizing boundary combination).
  Solution solution_at(Budget q) const;
};

// Exact MWBIS on a simply nested band for every budget 0..B.
BandResult solve_band(const LeveledPlanarInstance& band, Budget B);

// Baker-style scheme: for each residue r, solve the bands of G_r and share
// B across them; returns the best candidate over r. The result is within
// factor k/(k+1) of the optimum. Throws BadParams when k < 1.
Solution ptas(const LeveledPlanarInstance& lp, int k, Budget B);

}  // namespace mwbis
