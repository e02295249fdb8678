#include "gammak/ruleset.hpp"

#include <algorithm>
#include <stdexcept>

#include "gammak/bigint.hpp"

namespace gammak {

namespace {

// p + q*sqrt(3), exact
struct Surd3 {
  BigInt p;
  BigInt q;
};

Surd3 mul(const Surd3& a, const Surd3& b) {
  return Surd3{a.p * b.p + BigInt(3) * a.q * b.q, a.p * b.q + a.q * b.p};
}

int kind_rank(MoveKind kind) {
  switch (kind) {
    case MoveKind::TypeI: return 0;
    case MoveKind::TypeII: return 1;
    case MoveKind::TypeIII: return 2;
  }
  return 3;
}

}  // namespace

std::string to_string(const MoveSpec& move) {
  std::string out;
  switch (move.kind) {
    case MoveKind::TypeI: out = "TypeI"; break;
    case MoveKind::TypeII: out = "TypeII"; break;
    case MoveKind::TypeIII: out = "TypeIII i=" + std::to_string(move.i); break;
  }
  out += " (" + std::to_string(move.u) + "," + std::to_string(move.v) + ")";
  return out;
}

std::vector<ExtraPair> extra_pairs(const GameParams& params, std::int64_t i, std::int64_t bound) {
  if (params.k == 1) return {};
  if (i < 1 || i >= params.k) throw std::invalid_argument("tau index out of range");
  std::vector<ExtraPair> out;
  __int128 f = 0;
  __int128 g = i + 1;
  while (g <= bound) {
    out.push_back(ExtraPair{static_cast<std::int64_t>(f), static_cast<std::int64_t>(g)});
    __int128 next_f = f + g;
    __int128 next_g = static_cast<__int128>(params.k) * f + static_cast<__int128>(params.k + 1) * g + i;
    f = next_f;
    g = next_g;
  }
  return out;
}

ExtraPair extra_pair_at(const GameParams& params, std::int64_t i, std::int64_t n) {
  if (i < 1 || i >= params.k) throw std::invalid_argument("tau index out of range");
  if (n < -1) throw std::invalid_argument("pair index must be >= -1");
  if (n == -1) return ExtraPair{-1, 1};
  __int128 f = 0;
  __int128 g = i + 1;
  for (std::int64_t step = 0; step < n; ++step) {
    __int128 next_f = f + g;
    __int128 next_g = static_cast<__int128>(params.k) * f + static_cast<__int128>(params.k + 1) * g + i;
    f = next_f;
    g = next_g;
    if (g > INT64_MAX) throw std::overflow_error("extra pair overflows int64");
  }
  return ExtraPair{static_cast<std::int64_t>(f), static_cast<std::int64_t>(g)};
}

ExtraPair closed_form_k2(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("pair index must be non-negative");
  const Surd3 base{BigInt(2), BigInt(1)};
  Surd3 acc{BigInt(1), BigInt(0)};
  for (std::int64_t step = 0; step < n; ++step) acc = mul(acc, base);
  // f_n: rational part p of (1+sqrt3)(2+sqrt3)^n gives (2p - 2) / 4
  Surd3 top = mul(Surd3{BigInt(1), BigInt(1)}, acc);
  std::uint64_t rem = 0;
  BigInt f = (top.p - BigInt(1)).div_small(2, &rem);
  if (rem != 0) throw std::logic_error("closed form numerator is not divisible");
  // g_n: rational part of (2+sqrt3)^{n+1}; the conjugate pair sums to 2p
  Surd3 next = mul(acc, base);
  return ExtraPair{f.to_int64(), next.p.to_int64()};
}

ExtraMoveTable::ExtraMoveTable(const GameParams& params, std::int64_t move_bound)
    : params_(params), move_bound_(move_bound) {
  if (move_bound < 0) throw std::invalid_argument("move bound must be non-negative");
  for (std::int64_t i = 1; i < params_.k; ++i) {
    pairs_.push_back(extra_pairs(params_, i, move_bound + 1));
    const auto& list = pairs_.back();
    for (std::size_t n = 1; n < list.size(); ++n) {
      MoveSpec move{list[n].f, list[n].g - 1, MoveKind::TypeIII, static_cast<int>(i)};
      moves_.push_back(move);
      move_index_.emplace(std::make_pair(move.u, move.v), static_cast<int>(i));
    }
  }
}

const std::vector<ExtraPair>& ExtraMoveTable::pairs(std::int64_t i) const {
  if (i < 1 || i >= params_.k) throw std::invalid_argument("tau index out of range");
  return pairs_[static_cast<std::size_t>(i - 1)];
}

bool ExtraMoveTable::is_extra_move(std::int64_t u, std::int64_t v) const {
  return move_index_.count(std::make_pair(u, v)) != 0;
}

int ExtraMoveTable::extra_move_index(std::int64_t u, std::int64_t v) const {
  auto it = move_index_.find(std::make_pair(u, v));
  return it == move_index_.end() ? 0 : it->second;
}

bool is_move_in_gamma(const GameParams& params, std::int64_t u, std::int64_t v,
                      const ExtraMoveTable& extras) {
  if (u > v) std::swap(u, v);
  if (u < 0 || v < 1) return false;
  if (v > extras.move_bound()) throw std::out_of_range("move exceeds extra-move table bound");
  if (u == 0) return true;
  if (v - u < params.k) return true;
  return extras.is_extra_move(u, v);
}

MoveClass classify_move(const GameParams& params, std::int64_t u, std::int64_t v,
                        const ExtraMoveTable& extras) {
  if (u > v) std::swap(u, v);
  MoveClass out;
  if (u < 0 || v < 1) return out;
  if (v > extras.move_bound()) throw std::out_of_range("move exceeds extra-move table bound");
  if (u == 0) {
    out = MoveClass{true, MoveSpec{u, v, MoveKind::TypeI, 0}};
  } else if (v - u < params.k) {
    out = MoveClass{true, MoveSpec{u, v, MoveKind::TypeII, 0}};
  } else if (int i = extras.extra_move_index(u, v); i != 0) {
    out = MoveClass{true, MoveSpec{u, v, MoveKind::TypeIII, i}};
  }
  return out;
}

std::vector<std::pair<MoveSpec, Position>> legal_moves(const GameParams& params, Position pos,
                                                       const ExtraMoveTable& extras) {
  const std::int64_t x = pos.x;
  const std::int64_t y = pos.y;
  if (x > y || x < 0) throw std::invalid_argument("position must be normalized");

  std::vector<std::pair<MoveSpec, Position>> all;
  // Type I: drain one heap by any positive amount.
  for (std::int64_t n = 1; n <= y; ++n) {
    all.emplace_back(MoveSpec{0, n, MoveKind::TypeI, 0}, Position::of(x, y - n));
    if (n <= x) all.emplace_back(MoveSpec{0, n, MoveKind::TypeI, 0}, Position::of(x - n, y));
  }
  // Type II: remove p and q, both positive, |p - q| < k; iterating ordered
  // (p from x, q from y) covers both orientations.
  for (std::int64_t p = 1; p <= x; ++p) {
    std::int64_t q_lo = std::max<std::int64_t>(1, p - params.k + 1);
    std::int64_t q_hi = std::min(y, p + params.k - 1);
    for (std::int64_t q = q_lo; q <= q_hi; ++q) {
      all.emplace_back(MoveSpec{std::min(p, q), std::max(p, q), MoveKind::TypeII, 0},
                       Position::of(x - p, y - q));
    }
  }
  // Type III: explicit list, both orientations.
  for (const MoveSpec& move : extras.moves()) {
    if (x - move.u >= 0 && y - move.v >= 0)
      all.emplace_back(move, Position::of(x - move.u, y - move.v));
    if (x - move.v >= 0 && y - move.u >= 0)
      all.emplace_back(move, Position::of(x - move.v, y - move.u));
  }

  std::sort(all.begin(), all.end(), [](const auto& lhs, const auto& rhs) {
    if (lhs.second != rhs.second) return lhs.second < rhs.second;
    int lr = kind_rank(lhs.first.kind);
    int rr = kind_rank(rhs.first.kind);
    if (lr != rr) return lr < rr;
    return std::make_pair(lhs.first.v, lhs.first.u) < std::make_pair(rhs.first.v, rhs.first.u);
  });
  // unique keeps the first entry per successor, i.e. the preferred move
  all.erase(std::unique(all.begin(), all.end(),
                        [](const auto& lhs, const auto& rhs) { return lhs.second == rhs.second; }),
            all.end());
  return all;
}

}  // namespace gammak
