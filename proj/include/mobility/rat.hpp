#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "mobility/int128.hpp"

namespace mobility {

// Exact rational number, always normalized: den > 0 and gcd(|num|, den) = 1.
// Equality is structural equality of the normalized form. Values are
// immutable after construction and safe to share across threads.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(Int128 n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(long long n) : num_(n), den_(1) {}  // NOLINT
  Rat(int n) : num_(n), den_(1) {}        // NOLINT
  Rat(Int128 num, Int128 den);

  // Accepts "p/q" or a plain integer.
  static Rat parse(std::string_view s);

  Int128 num() const { return num_; }
  Int128 den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == Int128(1); }
  // Throws unless the value is an integer.
  Int128 to_integer() const;
  int sign() const { return num_.sign(); }
  Rat abs() const { return num_ < Int128(0) ? -*this : *this; }

  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;  // throws on zero divisor
  Rat operator-() const;

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return a.num_ * b.den_ < b.num_ * a.den_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.num_ * b.den_ <= b.num_ * a.den_; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

  // "p/q", or just "p" when the value is an integer.
  std::string str() const;

  // Decimal rendering with the given number of places, rounded half-even.
  // Presentation only; never used as a source of truth.
  std::string decimal_str(int places) const;

 private:
  Int128 num_;
  Int128 den_;
};

}  // namespace mobility
