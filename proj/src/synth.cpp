#include "gammak/synth.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "gammak/ruleset.hpp"

namespace gammak {

namespace {

constexpr std::int64_t kNoValue = std::numeric_limits<std::int64_t>::max();

struct CoverState {
  std::int64_t bound;
  std::int64_t k;
  std::unordered_set<Position, PositionHash> members;
  std::vector<std::int64_t> min_other;
  std::vector<std::int64_t> gap_min_x;
  std::vector<std::pair<std::int64_t, std::int64_t>> adjoined;

  CoverState(const GameParams& params, std::int64_t bound_in)
      : bound(bound_in),
        k(params.k),
        min_other(static_cast<std::size_t>(bound_in + 1), kNoValue),
        gap_min_x(static_cast<std::size_t>(bound_in + 1), kNoValue) {
    for (const Position& p : s_set(params, bound_in)) {
      members.insert(p);
      min_other[static_cast<std::size_t>(p.x)] =
          std::min(min_other[static_cast<std::size_t>(p.x)], p.y);
      min_other[static_cast<std::size_t>(p.y)] =
          std::min(min_other[static_cast<std::size_t>(p.y)], p.x);
      gap_min_x[static_cast<std::size_t>(p.y - p.x)] =
          std::min(gap_min_x[static_cast<std::size_t>(p.y - p.x)], p.x);
    }
  }

  bool is_member(std::int64_t x, std::int64_t y) const {
    return members.count(Position{x, y}) != 0;
  }

  // any base or adjoined move from (x, y) into the member set?
  bool covered(std::int64_t x, std::int64_t y) const {
    if (min_other[static_cast<std::size_t>(x)] < y ||
        min_other[static_cast<std::size_t>(y)] < x) {
      return true;
    }
    const std::int64_t gap = y - x;
    std::int64_t lo = std::max<std::int64_t>(0, gap - k + 1);
    std::int64_t hi = std::min(bound, gap + k - 1);
    for (std::int64_t g2 = lo; g2 <= hi; ++g2) {
      std::int64_t best = gap_min_x[static_cast<std::size_t>(g2)];
      if (best < x && best < y - g2) return true;
    }
    if (gap < k) {
      std::int64_t cross_hi = std::min(bound, k - 1 - gap);
      for (std::int64_t g2 = 0; g2 <= cross_hi; ++g2) {
        std::int64_t best = gap_min_x[static_cast<std::size_t>(g2)];
        if (best != kNoValue && best < x - g2) return true;
      }
    }
    for (const auto& [u, v] : adjoined) {
      if (x - u >= 0 && y - v >= 0 && is_member(std::min(x - u, y - v), std::max(x - u, y - v)))
        return true;
      if (x - v >= 0 && y - u >= 0 && is_member(std::min(x - v, y - u), std::max(x - v, y - u)))
        return true;
    }
    return false;
  }

  void visit(std::int64_t x, std::int64_t y) {
    if (is_member(x, y) || covered(x, y)) return;
    adjoined.emplace_back(x, y);
  }
};

}  // namespace

std::string to_string(TraversalOrder order) {
  return order == TraversalOrder::SumThenX ? "sum-then-x" : "lexicographic";
}

std::vector<std::pair<std::int64_t, std::int64_t>> greedy_synthesize(const GameParams& params,
                                                                     std::int64_t bound,
                                                                     TraversalOrder order) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  CoverState state(params, bound);
  if (order == TraversalOrder::SumThenX) {
    for (std::int64_t sum = 0; sum <= 2 * bound; ++sum) {
      for (std::int64_t x = std::max<std::int64_t>(0, sum - bound); 2 * x <= sum; ++x) {
        state.visit(x, sum - x);
      }
    }
  } else {
    for (std::int64_t x = 0; x <= bound; ++x) {
      for (std::int64_t y = x; y <= bound; ++y) state.visit(x, y);
    }
  }
  return state.adjoined;
}

SynthReport compare_with_extra_moves(const GameParams& params, std::int64_t bound) {
  ExtraMoveTable table(params, bound);
  std::vector<std::pair<std::int64_t, std::int64_t>> expected;
  for (const MoveSpec& move : table.moves()) {
    expected.emplace_back(move.u, move.v);
  }
  std::sort(expected.begin(), expected.end());

  SynthReport report;
  for (TraversalOrder order : {TraversalOrder::SumThenX, TraversalOrder::Lexicographic}) {
    std::vector<std::pair<std::int64_t, std::int64_t>> adjoined =
        greedy_synthesize(params, bound, order);
    std::vector<std::pair<std::int64_t, std::int64_t>> sorted = adjoined;
    std::sort(sorted.begin(), sorted.end());

    report.order = order;
    report.adjoined = std::move(adjoined);
    report.only_adjoined.clear();
    report.only_expected.clear();
    std::set_difference(sorted.begin(), sorted.end(), expected.begin(), expected.end(),
                        std::back_inserter(report.only_adjoined));
    std::set_difference(expected.begin(), expected.end(), sorted.begin(), sorted.end(),
                        std::back_inserter(report.only_expected));
    report.equal = report.only_adjoined.empty() && report.only_expected.empty();
    if (report.equal) break;
  }
  return report;
}

}  // namespace gammak
