#pragma once

#include <vector>

#include "wbf/weyl.hpp"

namespace wbf {

// Filtration weight (u, v) on (x, ∂). Parameters, σ and ∂_t carry weight 0.
struct WeightSpec {
  std::vector<Rational> u;
  std::vector<Rational> v;

  WeightSpec() = default;
  WeightSpec(std::vector<Rational> u_, std::vector<Rational> v_);
  // (u, v) = (−ω, ω)
  static WeightSpec from_omega(const std::vector<Rational>& omega);
  std::size_t n() const { return u.size(); }
};

Rational weighted_degree(const WeylOperator& p, const WeightSpec& w);
WeylOperator initial_form(const WeylOperator& p, const WeightSpec& w);
Rational term_weight(const AlgebraSignature& sig, const Monomial& m, const WeightSpec& w);

// Monomial order: weight rows compared in turn, then lexicographic on
// ∂_1 > ⋯ > ∂_n > ∂_t > x_1 > ⋯ > x_n > params > σ. Module components are
// compared first (position over term) with component 0 largest.
class TermOrder {
 public:
  TermOrder() = default;
  TermOrder(std::size_t slots, std::vector<std::vector<Rational>> rows, std::vector<std::size_t> lex);

  // Total degree, then the lex tie-break.
  static TermOrder grlex(const AlgebraSignature& sig);
  // (u,v)-weight, refined by total degree and lex.
  static TermOrder weighted(const AlgebraSignature& sig, const WeightSpec& w);
  // Order on D^(h): total degree (h included), then (−ω,ω) with h of weight 0,
  // then total degree without h.
  static TermOrder homogenized_weight(const AlgebraSignature& sig, const std::vector<Rational>& omega);
  // Any monomial with more block degree beats one with less; then grlex.
  static TermOrder elimination(const AlgebraSignature& sig, const std::vector<std::size_t>& block);

  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  // Every variable exceeds 1 (so the order is a well-order).
  bool is_admissible() const;
  std::size_t slots() const { return slots_; }
  const std::vector<std::vector<long long>>& rows() const { return rows_; }

 private:
  std::size_t slots_ = 0;
  std::vector<std::vector<long long>> rows_;
  std::vector<std::size_t> lex_;
};

// Leading monomial and coefficient of a nonzero operator.
std::pair<Monomial, Rational> leading_term(const WeylOperator& p, const TermOrder& order);

// Weyl homogenization with deg x_i = deg ∂_i = 1; requires an h parameter in
// the target signature. Input is rebased from the plain signature.
WeylOperator homogenize(const WeylOperator& p, const SignaturePtr& hsig);
// Sets h = 1 and returns the operator over the plain signature.
WeylOperator dehomogenize(const WeylOperator& p, const SignaturePtr& plain);
// Adds a central parameter h to a signature and marks it homogenized.
SignaturePtr homogenized_signature(const AlgebraSignature& sig);

}  // namespace wbf
