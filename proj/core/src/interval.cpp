#include "mwbis/interval.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <tuple>

#include "mwbis/errors.hpp"

namespace mwbis {

namespace {

constexpr long long kCellGuard = 100'000'000;

void validate_intervals(std::span<const Interval> intervals, Budget B) {
  if (B < 0) {
    throw ValidationError(ErrorCode::BadParams, "negative budget cap");
  }
  for (const Interval& iv : intervals) {
    if (iv.start >= iv.finish) {
      throw ValidationError(ErrorCode::BadParams,
                            "interval " + std::to_string(iv.id) +
                                " has start >= finish");
    }
    if (iv.budget < 1) {
      throw ValidationError(ErrorCode::NonPositiveBudget,
                            "interval " + std::to_string(iv.id));
    }
    if (iv.weight < 0) {
      throw ValidationError(ErrorCode::NegativeWeight,
                            "interval " + std::to_string(iv.id));
    }
  }
}

}  // namespace

IntervalSet make_interval_set(std::vector<Interval> intervals, Budget B) {
  validate_intervals(intervals, B);
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) {
              return std::tie(a.finish, a.start, a.weight, a.budget, a.id) <
                     std::tie(b.finish, b.start, b.weight, b.budget, b.id);
            });
  IntervalSet iset;
  iset.intervals = std::move(intervals);
  iset.pred = compute_predecessors(iset.intervals);
  iset.B = B;
  return iset;
}

std::vector<std::int32_t> compute_predecessors(
    std::span<const Interval> sorted) {
  const std::size_t n = sorted.size();
  std::vector<std::int64_t> finishes(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && sorted[i].finish < sorted[i - 1].finish) {
      throw ValidationError(ErrorCode::UnsortedInput,
                            "finish order violated at index " +
                                std::to_string(i));
    }
    finishes[i] = sorted[i].finish;
  }
  std::vector<std::int32_t> pred(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const auto it = std::upper_bound(finishes.begin(), finishes.end(),
                                     sorted[j].start);
    pred[j] = static_cast<std::int32_t>(it - finishes.begin());
    assert(pred[j] <= static_cast<std::int32_t>(j));
  }
  return pred;
}

Solution solve_intervals(const IntervalSet& iset) {
  const std::size_t n = iset.intervals.size();
  const Budget B = iset.B;
  const long long cells = static_cast<long long>(n + 1) * (B + 1);
  if (cells > kCellGuard) {
    throw SolverError(ErrorCode::BudgetGuardExceeded,
                      std::to_string(cells) + " cells");
  }
  const std::size_t width = static_cast<std::size_t>(B) + 1;
  std::vector<std::vector<Weight>> w(n + 1, std::vector<Weight>(width, 0));
  std::vector<std::vector<char>> f(n + 1, std::vector<char>(width, 0));
  for (std::size_t j = 1; j <= n; ++j) {
    const Interval& iv = iset.intervals[j - 1];
    const std::size_t lj = static_cast<std::size_t>(iset.pred[j - 1]);
    for (Budget t = 0; t <= B; ++t) {
      const std::size_t tu = static_cast<std::size_t>(t);
      Weight skip = w[j - 1][tu];
      if (t >= iv.budget) {
        const Weight take =
            w[lj][static_cast<std::size_t>(t - iv.budget)] + iv.weight;
        if (take > skip) {
          w[j][tu] = take;
          f[j][tu] = 1;
          continue;
        }
      }
      w[j][tu] = skip;
    }
  }

  Solution sol;
  std::size_t j = n;
  Budget t = B;
  while (j >= 1) {
    if (f[j][static_cast<std::size_t>(t)]) {
      const Interval& iv = iset.intervals[j - 1];
      sol.vertices.push_back(iv.id);
      sol.total_weight += iv.weight;
      sol.total_budget += iv.budget;
      t -= iv.budget;
      j = static_cast<std::size_t>(iset.pred[j - 1]);
    } else {
      --j;
    }
  }
  std::sort(sol.vertices.begin(), sol.vertices.end());
  assert(sol.total_weight == w[n][static_cast<std::size_t>(B)]);
  return sol;
}

Instance intersection_graph(const IntervalSet& iset) {
  const std::size_t n = iset.intervals.size();
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const Interval& x = iset.intervals[a];
      const Interval& y = iset.intervals[b];
      const bool disjoint = x.finish <= y.start || y.finish <= x.start;
      if (!disjoint) {
        edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
      }
    }
  }
  std::vector<Weight> weight(n);
  std::vector<Budget> budget(n);
  for (std::size_t i = 0; i < n; ++i) {
    weight[i] = iset.intervals[i].weight;
    budget[i] = iset.intervals[i].budget;
  }
  return make_instance(static_cast<std::int32_t>(n), edges, std::move(weight),
                       std::move(budget), iset.B);
}

}  // namespace mwbis
