#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace gammak {

// Game parameter k >= 1 together with the surd discriminant k^2 + 4k.
// The discriminant lies strictly between (k+1)^2 and (k+2)^2, so it is
// never a perfect square and n^2 * disc is irrational-rooted for n >= 1.
struct GameParams {
  std::int64_t k;
  std::int64_t disc;

  explicit GameParams(std::int64_t k_in);
};

// Unordered pair of heap sizes, stored with x <= y.
struct Position {
  std::int64_t x = 0;
  std::int64_t y = 0;

  static Position of(std::int64_t a, std::int64_t b);
  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;
};

struct PositionHash {
  std::size_t operator()(const Position& p) const {
    return static_cast<std::size_t>(p.x * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(p.y));
  }
};

// floor(n * alpha_k), alpha_k = (k + sqrt(disc)) / (2k), computed exactly.
std::int64_t beatty_a(const GameParams& params, std::int64_t n);
// floor(n * beta_k), beta_k = (k + 2 + sqrt(disc)) / 2, computed exactly.
std::int64_t beatty_b(const GameParams& params, std::int64_t n);

// If value = a_n for some n >= 0, returns that n (zero maps to 0).
std::optional<std::int64_t> index_in_a(const GameParams& params, std::int64_t value);
// If value = b_m for some m >= 1 (or value 0, m = 0), returns that m.
std::optional<std::int64_t> index_in_b(const GameParams& params, std::int64_t value);

// Dense tables of a_n, b_n and the step sequences c_n = a_n - a_{n-1},
// d_n = b_n - b_{n-1}, plus exact inverse maps value -> index.
// Immutable after construction; concurrent reads are safe.
class BeattyTables {
 public:
  BeattyTables(const GameParams& params, std::int64_t n_max);

  const GameParams& params() const { return params_; }
  std::int64_t n_max() const { return static_cast<std::int64_t>(a_.size()) - 1; }

  std::int64_t a(std::int64_t n) const;  // 0 <= n <= n_max
  std::int64_t b(std::int64_t n) const;
  std::int64_t c(std::int64_t n) const;  // 1 <= n <= n_max
  std::int64_t d(std::int64_t n) const;
  std::int64_t gap(std::int64_t n) const { return b(n) - a(n); }

  std::optional<std::int64_t> index_of_a(std::int64_t value) const;
  std::optional<std::int64_t> index_of_b(std::int64_t value) const;

 private:
  void check_range(std::int64_t n, std::int64_t lo) const;

  GameParams params_;
  std::vector<std::int64_t> a_;
  std::vector<std::int64_t> b_;
  std::unordered_map<std::int64_t, std::int64_t> index_of_a_;
  std::unordered_map<std::int64_t, std::int64_t> index_of_b_;
};

// All pairs (a_n, b_n) with b_n <= bound, including (0, 0), in index order
// (which is also lexicographic order).
std::vector<Position> s_set(const GameParams& params, std::int64_t bound);

}  // namespace gammak
