#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "mwbis/instance.hpp"
#include "mwbis/interval.hpp"
#include "mwbis/planar.hpp"
#include "mwbis/reductions.hpp"

namespace mwbis {

// File grammars. '#' starts a comment anywhere; blank lines are skipped.
//   graph:     mwbis <n> <m> <B>
//              v <id> <weight-milli> <budget>   (one per vertex)
//              e <u> <v>                        (m lines)
//              root <id>                        (optional)
//   leveled:   graph grammar without root, plus `level <i> <id...>` lines
//              (face edges implied by level order; e lines are cross edges)
//   intervals: intervals <n> <B>; i <start> <finish> <weight-milli> <budget>
//   knapsack:  knapsack <n> <capacity>; k <value> <size>
enum class FileKind { Graph, Leveled, Intervals, Knapsack };

// Decides by the header keyword; a `mwbis` file with any level line is
// Leveled. Throws ParseError on a missing or unknown header.
FileKind sniff_kind(const std::string& path);

struct GraphFile {
  Instance instance;
  std::optional<VertexId> root;
  bool operator==(const GraphFile&) const = default;
};

GraphFile parse_graph(std::istream& in);
GraphFile parse_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Instance& inst,
                 std::optional<VertexId> root = std::nullopt);

LeveledPlanarInstance parse_leveled(std::istream& in);
LeveledPlanarInstance parse_leveled_file(const std::string& path);
void write_leveled(std::ostream& out, const LeveledPlanarInstance& lp);

IntervalSet parse_intervals(std::istream& in);
IntervalSet parse_intervals_file(const std::string& path);
void write_intervals(std::ostream& out, const IntervalSet& iset);

KnapsackInstance parse_knapsack(std::istream& in);
KnapsackInstance parse_knapsack_file(const std::string& path);
void write_knapsack(std::ostream& out, const KnapsackInstance& kp);

}  // namespace mwbis
