#include "mobility/rat.hpp"

#include <stdexcept>

namespace mobility {

Rat::Rat(Int128 num, Int128 den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
  if (den_ < Int128(0)) {
    num_ = -num_;
    den_ = -den_;
  }
  Int128 g = gcd(num_, den_);
  if (g > Int128(1)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  if (num_.is_zero()) den_ = Int128(1);
}

Rat Rat::parse(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(Int128::parse(s));
  return Rat(Int128::parse(s.substr(0, slash)), Int128::parse(s.substr(slash + 1)));
}

Int128 Rat::to_integer() const {
  if (!is_integer()) throw std::domain_error("rational " + str() + " is not an integer");
  return num_;
}

Rat Rat::operator+(const Rat& o) const {
  return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rat Rat::operator-(const Rat& o) const {
  return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rat Rat::operator*(const Rat& o) const { return Rat(num_ * o.num_, den_ * o.den_); }

Rat Rat::operator/(const Rat& o) const {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  return Rat(num_ * o.den_, den_ * o.num_);
}

Rat Rat::operator-() const {
  Rat r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

std::string Rat::str() const {
  if (is_integer()) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::string Rat::decimal_str(int places) const {
  if (places < 0) throw std::domain_error("negative decimal places");
  Int128 scale(1);
  for (int i = 0; i < places; ++i) scale *= Int128(10);
  Int128 mag = num_.abs();
  Int128 scaled = mag * scale;
  Int128 q = scaled / den_;
  Int128 r = scaled % den_;
  // Round half to even on the true remainder.
  Int128 twice = r * Int128(2);
  if (twice > den_ || (twice == den_ && (q % Int128(2)) == Int128(1))) q += Int128(1);

  Int128 whole = q / scale;
  Int128 frac = q % scale;
  std::string out;
  if (sign() < 0 && !q.is_zero()) out.push_back('-');
  out += whole.str();
  if (places > 0) {
    std::string f = frac.str();
    out.push_back('.');
    out.append(static_cast<std::size_t>(places) - f.size(), '0');
    out += f;
  }
  return out;
}

}  // namespace mobility
