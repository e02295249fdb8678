#include "gammak/beatty.hpp"

#include <stdexcept>
#include <utility>

#include "gammak/bigint.hpp"

namespace gammak {

namespace {

// isqrt(n^2 * disc) with a fast 64-bit path; this is floor(n * sqrt(disc)).
std::int64_t isqrt_scaled(const GameParams& params, std::int64_t n) {
  unsigned __int128 wide = static_cast<unsigned __int128>(n) * static_cast<unsigned __int128>(n) *
                           static_cast<unsigned __int128>(params.disc);
  if (wide <= ~std::uint64_t{0}) {
    return static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(wide)));
  }
  BigInt big_n(n);
  return isqrt(big_n * big_n * BigInt(params.disc)).to_int64();
}

}  // namespace

GameParams::GameParams(std::int64_t k_in) : k(k_in), disc(0) {
  if (k < 1) throw std::invalid_argument("game parameter k must be >= 1");
  if (k > 2000000000) throw std::invalid_argument("game parameter k is too large");
  disc = k * k + 4 * k;
}

Position Position::of(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw std::invalid_argument("heap sizes must be non-negative");
  if (a > b) std::swap(a, b);
  return Position{a, b};
}

std::int64_t beatty_a(const GameParams& params, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("sequence index must be non-negative");
  if (n == 0) return 0;
  // n*alpha = (n*k + sqrt(n^2*disc)) / (2k); the floor passes through the
  // integer numerator because n^2*disc is never a perfect square.
  unsigned __int128 num = static_cast<unsigned __int128>(n) * static_cast<unsigned __int128>(params.k) +
                          static_cast<unsigned __int128>(isqrt_scaled(params, n));
  unsigned __int128 value = num / (2 * static_cast<unsigned __int128>(params.k));
  if (value > static_cast<unsigned __int128>(INT64_MAX)) throw std::overflow_error("beatty_a overflows int64");
  return static_cast<std::int64_t>(value);
}

std::int64_t beatty_b(const GameParams& params, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("sequence index must be non-negative");
  if (n == 0) return 0;
  unsigned __int128 num = static_cast<unsigned __int128>(n) * static_cast<unsigned __int128>(params.k + 2) +
                          static_cast<unsigned __int128>(isqrt_scaled(params, n));
  unsigned __int128 value = num / 2;
  if (value > static_cast<unsigned __int128>(INT64_MAX)) throw std::overflow_error("beatty_b overflows int64");
  return static_cast<std::int64_t>(value);
}

std::optional<std::int64_t> index_in_a(const GameParams& params, std::int64_t value) {
  if (value < 0) return std::nullopt;
  if (value == 0) return 0;
  // n = floor((value+1)/alpha), 1/alpha = (sqrt(disc) - k) / 2
  __int128 n = (static_cast<__int128>(isqrt_scaled(params, value + 1)) -
                static_cast<__int128>(value + 1) * params.k) /
               2;
  if (beatty_a(params, static_cast<std::int64_t>(n)) != value) return std::nullopt;
  return static_cast<std::int64_t>(n);
}

std::optional<std::int64_t> index_in_b(const GameParams& params, std::int64_t value) {
  if (value < 0) return std::nullopt;
  if (value == 0) return 0;
  // m = floor((value+1)/beta), 1/beta = (k + 2 - sqrt(disc)) / 2; the floor
  // of (I - frac)/2 for integer I equals floor((I-1)/2).
  __int128 whole = static_cast<__int128>(value + 1) * (params.k + 2) -
                   static_cast<__int128>(isqrt_scaled(params, value + 1));
  std::int64_t m = static_cast<std::int64_t>((whole - 1) / 2);
  if (m < 1 || beatty_b(params, m) != value) return std::nullopt;
  return m;
}

BeattyTables::BeattyTables(const GameParams& params, std::int64_t n_max) : params_(params) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  a_.reserve(n_max + 1);
  b_.reserve(n_max + 1);
  index_of_a_.reserve(static_cast<std::size_t>(n_max) * 2);
  index_of_b_.reserve(static_cast<std::size_t>(n_max) * 2);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    std::int64_t root = n == 0 ? 0 : isqrt_scaled(params_, n);
    std::int64_t an = n == 0 ? 0 : (n * params_.k + root) / (2 * params_.k);
    std::int64_t bn = n == 0 ? 0 : (n * (params_.k + 2) + root) / 2;
    a_.push_back(an);
    b_.push_back(bn);
    index_of_a_.emplace(an, n);
    index_of_b_.emplace(bn, n);
  }
}

void BeattyTables::check_range(std::int64_t n, std::int64_t lo) const {
  if (n < lo || n > n_max()) throw std::out_of_range("sequence index outside table");
}

std::int64_t BeattyTables::a(std::int64_t n) const {
  check_range(n, 0);
  return a_[static_cast<std::size_t>(n)];
}

std::int64_t BeattyTables::b(std::int64_t n) const {
  check_range(n, 0);
  return b_[static_cast<std::size_t>(n)];
}

std::int64_t BeattyTables::c(std::int64_t n) const {
  check_range(n, 1);
  return a_[static_cast<std::size_t>(n)] - a_[static_cast<std::size_t>(n - 1)];
}

std::int64_t BeattyTables::d(std::int64_t n) const {
  check_range(n, 1);
  return b_[static_cast<std::size_t>(n)] - b_[static_cast<std::size_t>(n - 1)];
}

std::optional<std::int64_t> BeattyTables::index_of_a(std::int64_t value) const {
  auto it = index_of_a_.find(value);
  if (it == index_of_a_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::int64_t> BeattyTables::index_of_b(std::int64_t value) const {
  auto it = index_of_b_.find(value);
  if (it == index_of_b_.end()) return std::nullopt;
  return it->second;
}

std::vector<Position> s_set(const GameParams& params, std::int64_t bound) {
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  std::vector<Position> out;
  out.push_back(Position{0, 0});
  for (std::int64_t n = 1;; ++n) {
    std::int64_t root = isqrt_scaled(params, n);
    std::int64_t bn = (n * (params.k + 2) + root) / 2;
    if (bn > bound) break;
    out.push_back(Position{(n * params.k + root) / (2 * params.k), bn});
  }
  return out;
}

}  // namespace gammak
