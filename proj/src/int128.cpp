#include "mobility/int128.hpp"

namespace mobility {

Int128 Int128::parse(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("integer literal has no digits");
  Int128 v(0);
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c < '0' || c > '9') throw std::invalid_argument("bad digit in integer literal");
    v = v * Int128(10) + Int128(c - '0');
  }
  return neg ? -v : v;
}

std::string Int128::str() const {
  if (v_ == 0) return "0";
  // min_raw() has no positive counterpart; peel one digit before negating.
  unsigned __int128 mag;
  bool neg = v_ < 0;
  if (v_ == min_raw()) {
    mag = static_cast<unsigned __int128>(1) << 127;
  } else {
    mag = static_cast<unsigned __int128>(neg ? -v_ : v_);
  }
  char buf[48];
  int pos = 48;
  while (mag > 0) {
    buf[--pos] = static_cast<char>('0' + static_cast<int>(mag % 10));
    mag /= 10;
  }
  std::string out;
  if (neg) out.push_back('-');
  out.append(buf + pos, buf + 48);
  return out;
}

Int128 gcd(Int128 a, Int128 b) {
  __int128 x = a.abs().raw();
  __int128 y = b.abs().raw();
  while (y != 0) {
    __int128 t = x % y;
    x = y;
    y = t;
  }
  return Int128::from_raw(x);
}

}  // namespace mobility
