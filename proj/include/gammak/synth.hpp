#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gammak/beatty.hpp"

namespace gammak {

enum class TraversalOrder {
  SumThenX,      // (x + y) ascending, then x ascending
  Lexicographic  // x ascending, then y ascending
};

std::string to_string(TraversalOrder order);

// Walks every normalized non-member position within bound in the given
// order, starting from the single-heap and diagonal base moves; whenever a
// position has no move into the pair set, the position itself is adjoined
// as a new move pair. Returns the adjoined pairs in adjoin order.
std::vector<std::pair<std::int64_t, std::int64_t>> greedy_synthesize(
    const GameParams& params, std::int64_t bound, TraversalOrder order = TraversalOrder::SumThenX);

struct SynthReport {
  bool equal = false;
  TraversalOrder order = TraversalOrder::SumThenX;  // the order that matched (or was tried last)
  std::vector<std::pair<std::int64_t, std::int64_t>> adjoined;
  std::vector<std::pair<std::int64_t, std::int64_t>> only_adjoined;  // mined but not closed-form
  std::vector<std::pair<std::int64_t, std::int64_t>> only_expected;  // closed-form but not mined
};

// Compares the mined set against the closed-form extra moves with v within
// bound. Tries the default traversal order first and falls back to
// lexicographic, reporting which order matched.
SynthReport compare_with_extra_moves(const GameParams& params, std::int64_t bound);

}  // namespace gammak
