#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gammak/ruleset.hpp"

namespace gammak {

// P/N classification of every normalized position with y <= bound.
class PNGrid {
 public:
  explicit PNGrid(std::int64_t bound);

  std::int64_t bound() const { return bound_; }
  bool is_p(std::int64_t x, std::int64_t y) const;  // any order, both <= bound
  void mark_p(std::int64_t x, std::int64_t y);      // x <= y
  std::vector<Position> p_positions() const;        // lexicographic

 private:
  std::size_t cell(std::int64_t x, std::int64_t y) const;

  std::int64_t bound_;
  std::vector<std::uint8_t> p_;  // triangular, x <= y
};

// Backward induction over antidiagonals. Per cell: O(1) single-heap checks
// via row/column P markers, O(k) gap-band checks for the diagonal moves,
// and the O(log bound) extra-move list.
PNGrid solve_grid(const GameParams& params, std::int64_t bound);
// Same induction with a caller-supplied extra move list (u <= v pairs).
PNGrid solve_grid(const GameParams& params, std::int64_t bound,
                  const std::vector<std::pair<std::int64_t, std::int64_t>>& extra_moves);

struct GridCheck {
  bool ok = true;
  std::string detail;                 // empty when ok
  std::optional<Position> witness;    // first offending cell / pair source
  std::optional<Position> witness2;   // pair target where applicable
};

// Brute-force P-set equals the Beatty pair set on the grid; on failure
// reports the lexicographically first disagreeing cell.
GridCheck verify_p_set(const GameParams& params, std::int64_t bound);

// No single move maps one pair-set member onto another (both orientations
// of every candidate difference are tested).
GridCheck check_no_p_to_p(const GameParams& params, std::int64_t bound);

struct WinningMove {
  MoveSpec move;
  Position target;

  friend bool operator==(const WinningMove&, const WinningMove&) = default;
};

std::string to_string(const WinningMove& wm);

// True when pos is a pair-set member (exact, O(1)).
bool is_p_position(const GameParams& params, Position pos);

// Tau index of the n-th pair when it lies in 1..k-1, otherwise nothing.
std::optional<std::int64_t> index_of_pposition(const GameParams& params, std::int64_t n);

// A move from pos into the pair set, or nothing when pos is already a
// member. Case order: single-heap moves, then the diagonal move onto the
// nearest reachable gap, then the extra move picked by the largest table
// entry below b_n. Throws std::logic_error if a selected move fails its
// landing test instead of guessing.
std::optional<WinningMove> winning_move(const GameParams& params, Position pos);

}  // namespace gammak
