#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "wbf/rational.hpp"

namespace wbf {

inline constexpr std::size_t kMaxVars = 16;

// Exponent vector γ ∈ ℕ^n with n ≤ kMaxVars.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n);
  MultiIndex(std::initializer_list<unsigned> exps);
  static MultiIndex unit(std::size_t n, std::size_t i, unsigned power = 1);

  std::size_t size() const { return n_; }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned value);

  unsigned total() const;
  // γ! = γ_1! ⋯ γ_n!
  Integer factorial() const;
  bool divides(const MultiIndex& other) const;  // componentwise ≤
  bool is_zero() const { return total() == 0; }

  MultiIndex operator+(const MultiIndex& o) const;
  // Componentwise difference; requires o ≤ *this.
  MultiIndex operator-(const MultiIndex& o) const;
  MultiIndex scaled(unsigned k) const;

  auto operator<=>(const MultiIndex&) const = default;
  bool operator==(const MultiIndex&) const = default;

 private:
  std::array<uint16_t, kMaxVars> e_{};
  uint8_t n_ = 0;
};

// Sparse multivariate polynomial over ℚ. No zero coefficient is ever stored.
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial monomial(const MultiIndex& m, const Rational& c = 1);
  static Polynomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const MultiIndex& m) const;

  void add_term(const MultiIndex& m, const Rational& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(unsigned k) const;
  bool operator==(const Polynomial& o) const = default;

  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  // Leading term under graded lexicographic order x_1 > x_2 > ⋯.
  std::pair<MultiIndex, Rational> leading_grlex() const;
  Polynomial derivative(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

void require_same_nvars(const Polynomial& a, const Polynomial& b);

// a + b and a · b, exact and canonical.
enum class ArithOp { add, mul };
Polynomial poly_arith(ArithOp op, const Polynomial& a, const Polynomial& b);

// ∂^β • f = Σ_{γ≥β} c_γ γ!/(γ−β)! x^{γ−β}
Polynomial partial_derive(const Polynomial& f, const MultiIndex& beta);

// Exact quotient a / b; throws Error when b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);
// Monic (grlex) greatest common divisor; gcd(0,0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
// Makes the grlex leading coefficient 1 (zero stays zero).
Polynomial make_monic(const Polynomial& p);

// num / den with gcd(num, den) = 1 and den monic under grlex.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(const Polynomial& p);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  std::size_t nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool operator==(const RationalFunction&) const = default;

 private:
  friend RationalFunction ratfun_reduce(const Polynomial&, const Polynomial&);
  Polynomial num_;
  Polynomial den_;
};

RationalFunction ratfun_reduce(const Polynomial& num, const Polynomial& den);
RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);

std::string to_string(const Polynomial& p);
std::string to_string(const RationalFunction& g);

}  // namespace wbf
