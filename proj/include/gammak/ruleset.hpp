#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gammak/beatty.hpp"

namespace gammak {

enum class MoveKind { TypeI, TypeII, TypeIII };

// A move (u, v): v > 0 tokens leave one heap and u (0 <= u <= v) the other.
// Which heap loses which amount is decided at application time.
struct MoveSpec {
  std::int64_t u = 0;
  std::int64_t v = 0;
  MoveKind kind = MoveKind::TypeI;
  int i = 0;  // tau index for TypeIII moves, 0 otherwise

  friend bool operator==(const MoveSpec&, const MoveSpec&) = default;
};

std::string to_string(const MoveSpec& move);

struct ExtraPair {
  std::int64_t f = 0;
  std::int64_t g = 0;

  friend bool operator==(const ExtraPair&, const ExtraPair&) = default;
};

// Pairs (f^i_n, g^i_n) from (f_0, g_0) = (0, i+1) and
// (f_n, g_n) = (f_{n-1} + g_{n-1}, k f_{n-1} + (k+1) g_{n-1} + i),
// listed while g <= bound. Empty for k = 1 (the index range is empty).
std::vector<ExtraPair> extra_pairs(const GameParams& params, std::int64_t i, std::int64_t bound);

// Single pair with back-step support: n = -1 yields (-1, 1).
ExtraPair extra_pair_at(const GameParams& params, std::int64_t i, std::int64_t n);

// (f^1_n, g^1_n) for k = 2 evaluated in Z[sqrt(3)], no floating point.
ExtraPair closed_form_k2(std::int64_t n);

// All extra moves (f^i_n, g^i_n - 1), n >= 1, with v <= move_bound,
// plus the generating pairs per index.
class ExtraMoveTable {
 public:
  ExtraMoveTable(const GameParams& params, std::int64_t move_bound);

  const GameParams& params() const { return params_; }
  std::int64_t move_bound() const { return move_bound_; }

  // generating pairs for tau index i (1 <= i <= k-1), g <= move_bound + 1
  const std::vector<ExtraPair>& pairs(std::int64_t i) const;
  const std::vector<MoveSpec>& moves() const { return moves_; }

  bool is_extra_move(std::int64_t u, std::int64_t v) const;
  // tau index of the extra move (u, v), or 0 when it is not one
  int extra_move_index(std::int64_t u, std::int64_t v) const;

 private:
  GameParams params_;
  std::int64_t move_bound_;
  std::vector<std::vector<ExtraPair>> pairs_;
  std::vector<MoveSpec> moves_;
  std::map<std::pair<std::int64_t, std::int64_t>, int> move_index_;
};

// Membership in the full move set: Type I (u = 0), Type II (u >= 1 and
// v - u < k) or an extra move. Requires v <= extras.move_bound().
bool is_move_in_gamma(const GameParams& params, std::int64_t u, std::int64_t v,
                      const ExtraMoveTable& extras);

// Classify a legal (u, v) with Type I > Type II > Type III priority;
// kind/index are reporting aids, membership itself is a set union.
struct MoveClass {
  bool legal = false;
  MoveSpec move;
};
MoveClass classify_move(const GameParams& params, std::int64_t u, std::int64_t v,
                        const ExtraMoveTable& extras);

// Every distinct successor of pos under one move, both orientations
// considered, normalized and deduplicated by successor. When several moves
// reach the same successor the representative is the first in
// (TypeI, TypeII, TypeIII, then (v, u)) order. Successors sorted.
std::vector<std::pair<MoveSpec, Position>> legal_moves(const GameParams& params, Position pos,
                                                       const ExtraMoveTable& extras);

}  // namespace gammak
