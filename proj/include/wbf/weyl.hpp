#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wbf/poly.hpp"
#include "wbf/rational.hpp"

namespace wbf {

// Variable layout of an operator algebra. Exponent slots are
//   x_1..x_n | central params | σ (if shift) | ∂_1..∂_n | ∂_t (if shift)
// The first three groups form the α block (written left), the rest the β block.
class AlgebraSignature {
 public:
  AlgebraSignature() = default;
  AlgebraSignature(std::vector<std::string> xs, std::vector<std::string> params, bool shift,
                   bool homogenized = false);

  // Plain D_n with default names (x,y,z or x1..xn).
  static std::shared_ptr<const AlgebraSignature> weyl(std::size_t n);
  static std::vector<std::string> default_names(std::size_t n);

  std::size_t n() const { return xs_.size(); }
  const std::vector<std::string>& xs() const { return xs_; }
  const std::vector<std::string>& params() const { return params_; }
  bool has_shift_pair() const { return shift_; }
  bool homogenized() const { return homogenized_; }

  std::size_t alpha_size() const { return n() + params_.size() + (shift_ ? 1 : 0); }
  std::size_t slots() const { return alpha_size() + n() + (shift_ ? 1 : 0); }
  std::size_t x_slot(std::size_t i) const { return i; }
  std::size_t param_slot(std::size_t k) const { return n() + k; }
  std::size_t sigma_slot() const { return n() + params_.size(); }
  std::size_t d_slot(std::size_t i) const { return alpha_size() + i; }
  std::size_t dt_slot() const { return alpha_size() + n(); }
  // Slot of the named central parameter, or -1.
  int param_index(const std::string& name) const;
  int h_slot() const;
  std::string slot_name(std::size_t slot) const;
  // True for D_n itself: no params, no shift pair.
  bool is_plain() const { return params_.empty() && !shift_; }

  bool operator==(const AlgebraSignature& o) const = default;

 private:
  std::vector<std::string> xs_;
  std::vector<std::string> params_;
  bool shift_ = false;
  bool homogenized_ = false;
};

using SignaturePtr = std::shared_ptr<const AlgebraSignature>;
SignaturePtr make_signature(std::vector<std::string> xs, std::vector<std::string> params = {},
                            bool shift = false, bool homogenized = false);

// Exponents over all slots plus a module component index (0 for ring elements).
struct Monomial {
  std::array<uint16_t, kMaxVars> e{};
  uint8_t comp = 0;

  unsigned degree(std::size_t slots) const;
  bool is_one() const;
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

// Commutative divisibility (same component, componentwise ≤).
bool mono_divides(const Monomial& a, const Monomial& b, std::size_t slots);
Monomial mono_lcm(const Monomial& a, const Monomial& b, std::size_t slots);
// b − a; requires mono_divides(a, b).
Monomial mono_quotient(const Monomial& b, const Monomial& a, std::size_t slots);

// Normally ordered expansion of a·b. Each product term is appended to out;
// duplicates are not merged. b's component is kept.
void multiply_monomials(const AlgebraSignature& sig, const Monomial& a, const Monomial& b,
                        std::vector<std::pair<Monomial, Integer>>& out);

class WeylOperator {
 public:
  using TermMap = std::map<Monomial, Rational>;

  WeylOperator() = default;
  explicit WeylOperator(SignaturePtr sig) : sig_(std::move(sig)) {}

  static WeylOperator constant(SignaturePtr sig, const Rational& c);
  static WeylOperator monomial(SignaturePtr sig, const Monomial& m, const Rational& c = 1);
  static WeylOperator x(SignaturePtr sig, std::size_t i);
  static WeylOperator d(SignaturePtr sig, std::size_t i);
  static WeylOperator param(SignaturePtr sig, const std::string& name);
  static WeylOperator sigma(SignaturePtr sig);
  static WeylOperator dt(SignaturePtr sig);
  // Multiplication operator by a polynomial in x_1..x_n.
  static WeylOperator from_polynomial(SignaturePtr sig, const Polynomial& f);

  const SignaturePtr& signature() const { return sig_; }
  const AlgebraSignature& sig() const { return *sig_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  WeylOperator operator+(const WeylOperator& o) const;
  WeylOperator operator-(const WeylOperator& o) const;
  WeylOperator operator*(const WeylOperator& o) const;
  WeylOperator operator-() const { return scaled(-1); }
  WeylOperator scaled(const Rational& c) const;
  WeylOperator pow(unsigned k) const;
  bool operator==(const WeylOperator& o) const;

  unsigned total_degree() const;
  // Same terms over another (compatible) signature, e.g. after adding params.
  WeylOperator rebased(SignaturePtr sig, const std::vector<int>& slot_map) const;

 private:
  SignaturePtr sig_;
  TermMap terms_;
};

void require_same_signature(const WeylOperator& a, const WeylOperator& b);

WeylOperator weyl_mul(const WeylOperator& p, const WeylOperator& q);

// Reference product: repeated single swaps ∂x → x∂ + 1 (and ∂_t σ → σ ∂_t − ∂_t).
// Slow; used to cross-check the closed-form product.
WeylOperator weyl_mul_by_rewriting(const WeylOperator& p, const WeylOperator& q);

// P • f for P in D_n (params allowed only if absent from P's support).
Polynomial apply_to_poly(const WeylOperator& p, const Polynomial& f);
RationalFunction apply_to_ratfun(const WeylOperator& p, const RationalFunction& g);
// Numerator N of P • (num/den) = N / den^k before any cancellation; zero iff P • g = 0.
Polynomial apply_numerator(const WeylOperator& p, const Polynomial& num, const Polynomial& den);

// ∂^β • (1/f) through the sum over partitions of β.
RationalFunction inverse_derivative_formula(const Polynomial& f, const MultiIndex& beta);

// Commutative polynomial in θ_1..θ_n, mapped by θ_i ↦ x_i∂_i.
using ThetaPolynomial = Polynomial;
WeylOperator theta_to_weyl(const ThetaPolynomial& p, SignaturePtr sig);

std::string to_string(const WeylOperator& p);

}  // namespace wbf
