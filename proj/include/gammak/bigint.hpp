#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gammak {

// Signed arbitrary-precision integer on base-2^32 limbs, little-endian.
// Everything in this project stays below a few hundred bits, so schoolbook
// multiplication and a bit-by-bit square root are all we need.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t value);  // implicit, ints promote freely in expressions

  static BigInt from_decimal(const std::string& text);

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return negative_; }

  BigInt operator-() const;

  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
  friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
  friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs) { return *this = *this * rhs; }

  // Floor quotient by a small positive divisor; requires *this >= 0.
  BigInt div_small(std::uint64_t divisor, std::uint64_t* remainder = nullptr) const;

  BigInt shifted_left(unsigned bits) const;
  // Floor shift; requires *this >= 0.
  BigInt shifted_right(unsigned bits) const;

  // -1, 0, +1
  int compare(const BigInt& rhs) const;
  friend bool operator==(const BigInt& a, const BigInt& b) { return a.compare(b) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return a.compare(b) != 0; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return a.compare(b) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return a.compare(b) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return a.compare(b) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return a.compare(b) >= 0; }

  bool fits_int64() const;
  std::int64_t to_int64() const;    // throws std::overflow_error out of range
  std::uint64_t to_uint64() const;  // throws if negative or wider than 64 bits
  std::string to_string() const;

  std::size_t bit_length() const;  // 0 for zero

 private:
  int compare_magnitude(const BigInt& rhs) const;
  void add_magnitude(const BigInt& rhs);
  void sub_magnitude(const BigInt& rhs);  // requires |rhs| <= |*this|
  void trim();

  bool negative_ = false;
  std::vector<std::uint32_t> limbs_;  // no leading zero limb; empty == 0
};

// floor(sqrt(value)); value must be non-negative.
BigInt isqrt(const BigInt& value);
std::uint64_t isqrt_u64(std::uint64_t value);

std::ostream& operator<<(std::ostream& out, const BigInt& value);

}  // namespace gammak
