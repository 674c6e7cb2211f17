#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mobility {

// Overflow-checked 128-bit signed integer. Every arithmetic operator throws
// std::overflow_error instead of wrapping; this is the integer type underneath
// all exact rational and polynomial arithmetic in the library.
//
// The supported board-size range is n <= 10^6: with that limit every quantity
// the library computes (move totals, strength numerators/denominators and
// their cross products) stays far below the 2^127 ceiling once fractions are
// kept normalized.
class Int128 {
 public:
  constexpr Int128() : v_(0) {}
  constexpr Int128(long long v) : v_(v) {}          // NOLINT: implicit by design
  constexpr Int128(long v) : v_(v) {}               // NOLINT
  constexpr Int128(int v) : v_(v) {}                // NOLINT
  constexpr Int128(unsigned long long v) : v_(v) {} // NOLINT

  static constexpr Int128 from_raw(__int128 v) {
    Int128 r;
    r.v_ = v;
    return r;
  }
  constexpr __int128 raw() const { return v_; }

  // Accepts an optional sign followed by decimal digits.
  static Int128 parse(std::string_view s);

  Int128 operator+(Int128 o) const {
    __int128 r;
    if (__builtin_add_overflow(v_, o.v_, &r)) throw std::overflow_error("Int128 add overflow");
    return from_raw(r);
  }
  Int128 operator-(Int128 o) const {
    __int128 r;
    if (__builtin_sub_overflow(v_, o.v_, &r)) throw std::overflow_error("Int128 sub overflow");
    return from_raw(r);
  }
  Int128 operator*(Int128 o) const {
    __int128 r;
    if (__builtin_mul_overflow(v_, o.v_, &r)) throw std::overflow_error("Int128 mul overflow");
    return from_raw(r);
  }
  Int128 operator-() const {
    if (v_ == min_raw()) throw std::overflow_error("Int128 negate overflow");
    return from_raw(-v_);
  }
  // Truncating division, as for the builtin integer types.
  Int128 operator/(Int128 o) const {
    if (o.v_ == 0) throw std::domain_error("Int128 division by zero");
    if (v_ == min_raw() && o.v_ == -1) throw std::overflow_error("Int128 div overflow");
    return from_raw(v_ / o.v_);
  }
  Int128 operator%(Int128 o) const {
    if (o.v_ == 0) throw std::domain_error("Int128 division by zero");
    if (v_ == min_raw() && o.v_ == -1) return Int128(0);
    return from_raw(v_ % o.v_);
  }

  Int128& operator+=(Int128 o) { return *this = *this + o; }
  Int128& operator-=(Int128 o) { return *this = *this - o; }
  Int128& operator*=(Int128 o) { return *this = *this * o; }

  friend constexpr bool operator==(Int128 a, Int128 b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Int128 a, Int128 b) { return a.v_ != b.v_; }
  friend constexpr bool operator<(Int128 a, Int128 b) { return a.v_ < b.v_; }
  friend constexpr bool operator<=(Int128 a, Int128 b) { return a.v_ <= b.v_; }
  friend constexpr bool operator>(Int128 a, Int128 b) { return a.v_ > b.v_; }
  friend constexpr bool operator>=(Int128 a, Int128 b) { return a.v_ >= b.v_; }

  constexpr bool is_zero() const { return v_ == 0; }
  constexpr int sign() const { return v_ < 0 ? -1 : v_ > 0 ? 1 : 0; }
  Int128 abs() const { return v_ < 0 ? -*this : *this; }

  bool fits_int64() const { return v_ >= INT64_MIN && v_ <= INT64_MAX; }
  std::int64_t to_int64() const {
    if (!fits_int64()) throw std::overflow_error("Int128 does not fit in 64 bits");
    return static_cast<std::int64_t>(v_);
  }

  std::string str() const;

 private:
  static constexpr __int128 min_raw() { return static_cast<__int128>(1) << 127; }
  __int128 v_;
};

Int128 gcd(Int128 a, Int128 b);

inline std::string to_string(Int128 v) { return v.str(); }

}  // namespace mobility
