#include "mwbis/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "mwbis/errors.hpp"

namespace mwbis {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ss(raw);
    Line line;
    line.number = number;
    std::string token;
    while (ss >> token) line.tokens.push_back(std::move(token));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ValidationError(ErrorCode::ParseError,
                        "line " + std::to_string(line) + ": " + what);
}

long long to_number(const Line& line, std::size_t idx) {
  const std::string& s = line.tokens[idx];
  long long out = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    fail(line.number, "expected an integer, got '" + s + "'");
  }
  return out;
}

void expect_tokens(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    fail(line.number, "'" + line.tokens[0] + "' needs " +
                          std::to_string(count - 1) + " fields");
  }
}

VertexId vertex_in_range(const Line& line, std::size_t idx, long long n) {
  const long long v = to_number(line, idx);
  if (v < 0 || v >= n) {
    throw ValidationError(ErrorCode::VertexOutOfRange,
                          "line " + std::to_string(line.number) + ": vertex " +
                              std::to_string(v));
  }
  return static_cast<VertexId>(v);
}

struct GraphBody {
  std::int32_t n = 0;
  long long m = 0;
  Budget B = 0;
  std::vector<Weight> weight;
  std::vector<Budget> budget;
  std::vector<char> seen;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::optional<VertexId> root;
  std::map<long long, std::pair<int, std::vector<VertexId>>> levels;
};

// Shared grammar of graph and leveled files; callers reject the directives
// that do not belong to their kind afterwards.
GraphBody parse_graph_body(const std::vector<Line>& lines) {
  if (lines.empty()) fail(1, "missing header");
  const Line& head = lines[0];
  if (head.tokens[0] != "mwbis") {
    fail(head.number, "expected 'mwbis <n> <m> <B>' header");
  }
  expect_tokens(head, 4);
  GraphBody body;
  const long long n = to_number(head, 1);
  if (n < 0 || n > 100'000'000) fail(head.number, "vertex count out of range");
  body.n = static_cast<std::int32_t>(n);
  body.m = to_number(head, 2);
  body.B = to_number(head, 3);
  body.weight.assign(static_cast<std::size_t>(n), 0);
  body.budget.assign(static_cast<std::size_t>(n), 1);
  body.seen.assign(static_cast<std::size_t>(n), 0);

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& kind = line.tokens[0];
    if (kind == "v") {
      expect_tokens(line, 4);
      const VertexId id = vertex_in_range(line, 1, n);
      if (body.seen[static_cast<std::size_t>(id)]) {
        fail(line.number, "vertex " + std::to_string(id) + " listed twice");
      }
      body.seen[static_cast<std::size_t>(id)] = 1;
      body.weight[static_cast<std::size_t>(id)] = to_number(line, 2);
      body.budget[static_cast<std::size_t>(id)] = to_number(line, 3);
    } else if (kind == "e") {
      expect_tokens(line, 3);
      const VertexId u = vertex_in_range(line, 1, n);
      const VertexId v = vertex_in_range(line, 2, n);
      body.edges.emplace_back(u, v);
    } else if (kind == "root") {
      expect_tokens(line, 2);
      if (body.root) fail(line.number, "second root directive");
      body.root = vertex_in_range(line, 1, n);
    } else if (kind == "level") {
      if (line.tokens.size() < 2) fail(line.number, "'level' needs an index");
      const long long li = to_number(line, 1);
      if (li < 1) fail(line.number, "level index must be >= 1");
      if (body.levels.count(li)) {
        fail(line.number, "level " + std::to_string(li) + " listed twice");
      }
      std::vector<VertexId> seq;
      for (std::size_t t = 2; t < line.tokens.size(); ++t) {
        seq.push_back(vertex_in_range(line, t, n));
      }
      body.levels.emplace(li, std::make_pair(line.number, std::move(seq)));
    } else {
      fail(line.number, "unknown directive '" + kind + "'");
    }
  }

  for (std::int32_t v = 0; v < body.n; ++v) {
    if (!body.seen[static_cast<std::size_t>(v)]) {
      fail(lines.back().number,
           "no 'v' line for vertex " + std::to_string(v));
    }
  }
  if (static_cast<long long>(body.edges.size()) != body.m) {
    fail(lines.back().number,
         "header says " + std::to_string(body.m) + " edges, found " +
             std::to_string(body.edges.size()));
  }
  return body;
}

template <typename Parse>
auto from_file(const std::string& path, Parse parse) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError(ErrorCode::ParseError, "cannot open " + path);
  }
  return parse(in);
}

}  // namespace

FileKind sniff_kind(const std::string& path) {
  return from_file(path, [](std::istream& in) {
    const auto lines = tokenize(in);
    if (lines.empty()) fail(1, "missing header");
    const std::string& head = lines[0].tokens[0];
    if (head == "intervals") return FileKind::Intervals;
    if (head == "knapsack") return FileKind::Knapsack;
    if (head == "mwbis") {
      for (const Line& line : lines) {
        if (line.tokens[0] == "level") return FileKind::Leveled;
      }
      return FileKind::Graph;
    }
    fail(lines[0].number, "unknown header '" + head + "'");
  });
}

GraphFile parse_graph(std::istream& in) {
  const auto lines = tokenize(in);
  GraphBody body = parse_graph_body(lines);
  if (!body.levels.empty()) {
    fail(body.levels.begin()->second.first,
         "'level' directive in a plain graph file");
  }
  GraphFile file;
  file.instance = make_instance(body.n, body.edges, std::move(body.weight),
                                std::move(body.budget), body.B);
  file.root = body.root;
  return file;
}

GraphFile parse_graph_file(const std::string& path) {
  return from_file(path, parse_graph);
}

void write_graph(std::ostream& out, const Instance& inst,
                 std::optional<VertexId> root) {
  const auto edges = edge_list(inst);
  out << "mwbis " << inst.n << ' ' << edges.size() << ' ' << inst.B << '\n';
  for (std::int32_t v = 0; v < inst.n; ++v) {
    out << "v " << v << ' ' << inst.weight[static_cast<std::size_t>(v)] << ' '
        << inst.budget[static_cast<std::size_t>(v)] << '\n';
  }
  for (const auto& [u, v] : edges) {
    out << "e " << u << ' ' << v << '\n';
  }
  if (root) out << "root " << *root << '\n';
}

LeveledPlanarInstance parse_leveled(std::istream& in) {
  const auto lines = tokenize(in);
  GraphBody body = parse_graph_body(lines);
  if (body.root) fail(lines[0].number, "'root' in a leveled file");
  std::vector<std::vector<VertexId>> levels;
  long long expected = 1;
  for (auto& [index, entry] : body.levels) {
    if (index != expected) {
      fail(entry.first, "level " + std::to_string(expected) + " missing");
    }
    ++expected;
    levels.push_back(std::move(entry.second));
  }
  auto edges = std::move(body.edges);
  for (const auto& level : levels) {
    for (std::size_t p = 0; p < level.size(); ++p) {
      edges.emplace_back(level[p], level[(p + 1) % level.size()]);
    }
  }
  Instance inst = make_instance(body.n, edges, std::move(body.weight),
                                std::move(body.budget), body.B);
  return validate_leveled(std::move(inst), std::move(levels));
}

LeveledPlanarInstance parse_leveled_file(const std::string& path) {
  return from_file(path, parse_leveled);
}

void write_leveled(std::ostream& out, const LeveledPlanarInstance& lp) {
  std::set<std::pair<VertexId, VertexId>> face;
  for (const auto& level : lp.levels) {
    for (std::size_t p = 0; p < level.size(); ++p) {
      const VertexId a = level[p];
      const VertexId b = level[(p + 1) % level.size()];
      face.emplace(std::min(a, b), std::max(a, b));
    }
  }
  std::vector<std::pair<VertexId, VertexId>> cross;
  for (const auto& e : edge_list(lp.instance)) {
    if (!face.count(e)) cross.push_back(e);
  }
  out << "mwbis " << lp.instance.n << ' ' << cross.size() << ' '
      << lp.instance.B << '\n';
  for (std::int32_t v = 0; v < lp.instance.n; ++v) {
    out << "v " << v << ' ' << lp.instance.weight[static_cast<std::size_t>(v)]
        << ' ' << lp.instance.budget[static_cast<std::size_t>(v)] << '\n';
  }
  for (const auto& [u, v] : cross) {
    out << "e " << u << ' ' << v << '\n';
  }
  for (std::size_t li = 0; li < lp.levels.size(); ++li) {
    out << "level " << li + 1;
    for (VertexId v : lp.levels[li]) out << ' ' << v;
    out << '\n';
  }
}

IntervalSet parse_intervals(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty()) fail(1, "missing header");
  const Line& head = lines[0];
  if (head.tokens[0] != "intervals") {
    fail(head.number, "expected 'intervals <n> <B>' header");
  }
  expect_tokens(head, 3);
  const long long n = to_number(head, 1);
  const Budget B = to_number(head, 2);
  std::vector<Interval> intervals;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "i") {
      fail(line.number, "unknown directive '" + line.tokens[0] + "'");
    }
    expect_tokens(line, 5);
    Interval iv;
    iv.start = to_number(line, 1);
    iv.finish = to_number(line, 2);
    iv.weight = to_number(line, 3);
    iv.budget = to_number(line, 4);
    iv.id = static_cast<VertexId>(intervals.size());
    intervals.push_back(iv);
  }
  if (static_cast<long long>(intervals.size()) != n) {
    fail(lines.back().number,
         "header says " + std::to_string(n) + " intervals, found " +
             std::to_string(intervals.size()));
  }
  return make_interval_set(std::move(intervals), B);
}

IntervalSet parse_intervals_file(const std::string& path) {
  return from_file(path, parse_intervals);
}

void write_intervals(std::ostream& out, const IntervalSet& iset) {
  out << "intervals " << iset.intervals.size() << ' ' << iset.B << '\n';
  // Rows in id order so parsing the output reassigns the same ids.
  std::vector<const Interval*> rows;
  rows.reserve(iset.intervals.size());
  for (const Interval& iv : iset.intervals) rows.push_back(&iv);
  std::sort(rows.begin(), rows.end(),
            [](const Interval* a, const Interval* b) { return a->id < b->id; });
  for (const Interval* iv : rows) {
    out << "i " << iv->start << ' ' << iv->finish << ' ' << iv->weight << ' '
        << iv->budget << '\n';
  }
}

KnapsackInstance parse_knapsack(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty()) fail(1, "missing header");
  const Line& head = lines[0];
  if (head.tokens[0] != "knapsack") {
    fail(head.number, "expected 'knapsack <n> <capacity>' header");
  }
  expect_tokens(head, 3);
  const long long n = to_number(head, 1);
  KnapsackInstance kp;
  kp.capacity = to_number(head, 2);
  if (kp.capacity < 0) {
    throw ValidationError(ErrorCode::BadParams, "negative capacity");
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "k") {
      fail(line.number, "unknown directive '" + line.tokens[0] + "'");
    }
    expect_tokens(line, 3);
    KnapsackItem item;
    item.value = to_number(line, 1);
    item.size = to_number(line, 2);
    if (item.value < 0) {
      throw ValidationError(ErrorCode::NegativeWeight,
                            "line " + std::to_string(line.number));
    }
    if (item.size < 1) {
      throw ValidationError(ErrorCode::NonPositiveBudget,
                            "line " + std::to_string(line.number));
    }
    kp.items.push_back(item);
  }
  if (static_cast<long long>(kp.items.size()) != n) {
    fail(lines.back().number,
         "header says " + std::to_string(n) + " items, found " +
             std::to_string(kp.items.size()));
  }
  return kp;
}

KnapsackInstance parse_knapsack_file(const std::string& path) {
  return from_file(path, parse_knapsack);
}

void write_knapsack(std::ostream& out, const KnapsackInstance& kp) {
  out << "knapsack " << kp.items.size() << ' ' << kp.capacity << '\n';
  for (const KnapsackItem& item : kp.items) {
    out << "k " << item.value << ' ' << item.size << '\n';
  }
}

}  // namespace mwbis
