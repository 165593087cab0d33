#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wbf/rational.hpp"

namespace wbf {

// Dense univariate polynomial over ℚ in the symbol s; coeffs[k] multiplies s^k.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c);
  static UPoly s();
  // s − r
  static UPoly linear_root(const Rational& r);
  static UPoly from_roots(const std::vector<Rational>& roots);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // −1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational lead() const;
  Rational eval(const Rational& x) const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly scaled(const Rational& k) const;
  bool operator==(const UPoly& o) const = default;

  UPoly derivative() const;
  UPoly monic() const;
  // p(a·s + b)
  UPoly substitute_affine(const Rational& a, const Rational& b) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Quotient and remainder of a by b ≠ 0.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(const UPoly& a, const UPoly& b);
// p / gcd(p, p'), monic.
UPoly squarefree_part(const UPoly& p);
// a | b
bool divides(const UPoly& a, const UPoly& b);
// Rational roots with multiplicities, sorted decreasing.
std::vector<std::pair<Rational, unsigned>> rational_roots(const UPoly& p);

// "s^2 + 3*s - 1/2"
std::string to_string(const UPoly& p);

}  // namespace wbf
