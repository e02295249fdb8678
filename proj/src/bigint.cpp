#include "gammak/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace gammak {

BigInt::BigInt(std::int64_t value) {
  negative_ = value < 0;
  // two's-complement safe magnitude, including INT64_MIN
  std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(value) + 1
                                : static_cast<std::uint64_t>(value);
  while (mag != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(mag));
    mag >>= 32;
  }
}

BigInt BigInt::from_decimal(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw std::invalid_argument("empty decimal literal");
  BigInt out;
  for (; pos < text.size(); ++pos) {
    char ch = text[pos];
    if (ch < '0' || ch > '9') throw std::invalid_argument("bad decimal digit");
    // out = out * 10 + digit
    std::uint64_t carry = static_cast<std::uint64_t>(ch - '0');
    for (std::uint32_t& limb : out.limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * 10 + carry;
      limb = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry != 0) out.limbs_.push_back(static_cast<std::uint32_t>(carry));
  }
  out.negative_ = negative && !out.limbs_.empty();
  return out;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

int BigInt::compare_magnitude(const BigInt& rhs) const {
  if (limbs_.size() != rhs.limbs_.size())
    return limbs_.size() < rhs.limbs_.size() ? -1 : 1;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] < rhs.limbs_[i] ? -1 : 1;
  }
  return 0;
}

int BigInt::compare(const BigInt& rhs) const {
  if (negative_ != rhs.negative_) return negative_ ? -1 : 1;
  int mag = compare_magnitude(rhs);
  return negative_ ? -mag : mag;
}

void BigInt::add_magnitude(const BigInt& rhs) {
  if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) + carry;
    if (i < rhs.limbs_.size()) cur += rhs.limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur);
    carry = cur >> 32;
  }
  if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
}

void BigInt::sub_magnitude(const BigInt& rhs) {
  assert(compare_magnitude(rhs) >= 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t cur = static_cast<std::int64_t>(limbs_[i]) - borrow;
    if (i < rhs.limbs_.size()) cur -= rhs.limbs_[i];
    if (cur < 0) {
      cur += static_cast<std::int64_t>(1) << 32;
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = static_cast<std::uint32_t>(cur);
  }
  assert(borrow == 0);
  trim();
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  if (!out.is_zero()) out.negative_ = !out.negative_;
  return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (negative_ == rhs.negative_) {
    add_magnitude(rhs);
  } else if (compare_magnitude(rhs) >= 0) {
    sub_magnitude(rhs);
  } else {
    BigInt tmp = rhs;
    tmp.sub_magnitude(*this);
    *this = std::move(tmp);
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
  BigInt out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  out.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    std::uint64_t a = lhs.limbs_[i];
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = out.limbs_[i + j] + a * rhs.limbs_[j] + carry;
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    std::size_t pos = i + rhs.limbs_.size();
    while (carry != 0) {
      assert(pos < out.limbs_.size());
      std::uint64_t cur = out.limbs_[pos] + carry;
      out.limbs_[pos] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      ++pos;
    }
  }
  out.negative_ = lhs.negative_ != rhs.negative_;
  out.trim();
  return out;
}

BigInt BigInt::div_small(std::uint64_t divisor, std::uint64_t* remainder) const {
  if (divisor == 0) throw std::domain_error("division by zero");
  if (negative_) throw std::domain_error("div_small requires a non-negative value");
  BigInt out;
  out.limbs_.assign(limbs_.size(), 0);
  unsigned __int128 rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    unsigned __int128 cur = (rem << 32) | limbs_[i];
    out.limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
    rem = cur % divisor;
  }
  out.trim();
  if (remainder != nullptr) *remainder = static_cast<std::uint64_t>(rem);
  return out;
}

BigInt BigInt::shifted_left(unsigned bits) const {
  if (is_zero() || bits == 0) return *this;
  unsigned limb_shift = bits / 32;
  unsigned bit_shift = bits % 32;
  BigInt out;
  out.negative_ = negative_;
  out.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) << bit_shift;
    out.limbs_[i + limb_shift] |= static_cast<std::uint32_t>(cur);
    out.limbs_[i + limb_shift + 1] |= static_cast<std::uint32_t>(cur >> 32);
  }
  out.trim();
  return out;
}

BigInt BigInt::shifted_right(unsigned bits) const {
  if (negative_) throw std::domain_error("shifted_right requires a non-negative value");
  unsigned limb_shift = bits / 32;
  unsigned bit_shift = bits % 32;
  if (limb_shift >= limbs_.size()) return BigInt();
  BigInt out;
  out.limbs_.assign(limbs_.size() - limb_shift, 0);
  for (std::size_t i = 0; i < out.limbs_.size(); ++i) {
    std::uint64_t cur = limbs_[i + limb_shift] >> bit_shift;
    if (bit_shift != 0 && i + limb_shift + 1 < limbs_.size()) {
      cur |= static_cast<std::uint64_t>(limbs_[i + limb_shift + 1]) << (32 - bit_shift);
    }
    out.limbs_[i] = static_cast<std::uint32_t>(cur);
  }
  out.trim();
  return out;
}

std::size_t BigInt::bit_length() const {
  if (limbs_.empty()) return 0;
  std::uint32_t top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 32;
  while (top != 0) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool BigInt::fits_int64() const {
  if (bit_length() < 64) return true;
  // INT64_MIN is the lone 64-bit magnitude that fits
  return bit_length() == 64 && negative_ && limbs_[0] == 0 && limbs_[1] == 0x80000000u;
}

std::int64_t BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("BigInt does not fit in int64");
  std::uint64_t mag = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
  return negative_ ? -static_cast<std::int64_t>(mag - 1) - 1 : static_cast<std::int64_t>(mag);
}

std::uint64_t BigInt::to_uint64() const {
  if (negative_ || bit_length() > 64) throw std::overflow_error("BigInt does not fit in uint64");
  std::uint64_t mag = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
  return mag;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  BigInt cur = *this;
  cur.negative_ = false;
  std::string digits;
  while (!cur.is_zero()) {
    std::uint64_t chunk = 0;
    cur = cur.div_small(1000000000u, &chunk);
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + chunk % 10));
      chunk /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (negative_) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::uint64_t isqrt_u64(std::uint64_t value) {
  if (value == 0) return 0;
  auto square_leq = [value](std::uint64_t r) {
    return static_cast<unsigned __int128>(r) * r <= value;
  };
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(value)));
  if (r > 0xFFFFFFFFull) r = 0xFFFFFFFFull;
  while (r > 0 && !square_leq(r)) --r;
  while (r < 0xFFFFFFFFull && square_leq(r + 1)) ++r;
  return r;
}

BigInt isqrt(const BigInt& value) {
  if (value.is_negative()) throw std::domain_error("isqrt of a negative value");
  if (value.bit_length() <= 64) {
    return BigInt(static_cast<std::int64_t>(isqrt_u64(value.to_uint64())));
  }
  BigInt root;
  for (std::size_t shift = (value.bit_length() + 1) / 2 + 1; shift-- > 0;) {
    BigInt cand = root + BigInt(1).shifted_left(static_cast<unsigned>(shift));
    if (cand * cand <= value) root = cand;
  }
  return root;
}

std::ostream& operator<<(std::ostream& out, const BigInt& value) {
  return out << value.to_string();
}

}  // namespace gammak
