#include "mobility/poly.hpp"

#include <stdexcept>

namespace mobility {

Poly::Poly(std::initializer_list<Rat> ascending_coeffs) : coeffs_(ascending_coeffs) { strip(); }

Poly::Poly(std::vector<Rat> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) { strip(); }

Poly Poly::monomial(Rat c, int deg) {
  if (deg < 0) throw std::domain_error("negative monomial degree");
  if (c.is_zero()) return Poly();
  std::vector<Rat> cs(static_cast<std::size_t>(deg) + 1, Rat(0));
  cs.back() = c;
  return Poly(std::move(cs));
}

void Poly::strip() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rat Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rat Poly::leading_coeff() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rat Poly::eval(Int128 n) const { return eval(Rat(n)); }

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> cs(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return Poly(std::move(cs));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Rat> cs(coeffs_.size());
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = -coeffs_[i];
  return Poly(std::move(cs));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> cs(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) cs[i + j] += coeffs_[i] * o.coeffs_[j];
  return Poly(std::move(cs));
}

Poly Poly::operator*(const Rat& s) const {
  std::vector<Rat> cs(coeffs_.size());
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = coeffs_[i] * s;
  return Poly(std::move(cs));
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    Rat c = coeff(d);
    if (c.is_zero()) continue;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    Rat mag = c.abs();
    bool unit = mag == Rat(1);
    if (!unit || d == 0) out += mag.str();
    if (d > 0) {
      if (!unit) out += "*";
      out += var;
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

std::optional<Poly> poly_div_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return Poly();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Rat> rem = a.coeffs();
  std::vector<Rat> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rat(0));
  Rat lead = b.leading_coeff();
  for (int d = a.degree(); d >= b.degree(); --d) {
    Rat c = rem[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    Rat q = c / lead;
    quot[static_cast<std::size_t>(d - b.degree())] = q;
    for (int i = 0; i <= b.degree(); ++i)
      rem[static_cast<std::size_t>(d - b.degree() + i)] -= q * b.coeff(i);
  }
  for (const Rat& c : rem)
    if (!c.is_zero()) return std::nullopt;
  return Poly(std::move(quot));
}

std::int64_t sign_stabilization_bound(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("sign bound of zero polynomial");
  Rat lead = p.leading_coeff().abs();
  Rat max_ratio(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rat r = p.coeff(i).abs() / lead;
    if (r > max_ratio) max_ratio = r;
  }
  Rat bound = Rat(1) + max_ratio;
  // ceil of a positive rational
  Int128 q = bound.num() / bound.den();
  if (!(bound.num() % bound.den()).is_zero()) q += Int128(1);
  return q.to_int64();
}

}  // namespace mobility
