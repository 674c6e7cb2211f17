#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "mobility/rat.hpp"

namespace mobility {

// Univariate polynomial over Rat, stored dense in ascending degree with
// trailing zeros stripped. The zero polynomial has degree() == -1.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rat> ascending_coeffs);
  explicit Poly(std::vector<Rat> ascending_coeffs);

  static Poly constant(Rat c) { return Poly({c}); }
  // c * x^deg
  static Poly monomial(Rat c, int deg);
  static Poly x() { return Poly({Rat(0), Rat(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rat coeff(int i) const;
  Rat leading_coeff() const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Rat eval(Int128 n) const;
  Rat eval(const Rat& x) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& s) const;
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Human form, e.g. "2n^2 - 49n + 60".
  std::string str(const std::string& var = "n") const;

 private:
  void strip();
  std::vector<Rat> coeffs_;
};

// Exact quotient q with a = q*b, or nullopt when b does not divide a.
// Throws std::domain_error when b is the zero polynomial.
std::optional<Poly> poly_div_exact(const Poly& a, const Poly& b);

// Smallest integer N0 derived from the Cauchy root bound,
// N0 = ceil(1 + max_i |a_i / a_d|), such that sign(p(x)) equals the sign of
// the leading coefficient for every real x >= N0. Throws on the zero
// polynomial.
std::int64_t sign_stabilization_bound(const Poly& p);

}  // namespace mobility
