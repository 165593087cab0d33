#pragma once

#include <cstddef>
#include <vector>

#include "wbf/order.hpp"
#include "wbf/weyl.hpp"

namespace wbf {

// Limits for a single Buchberger run. Exceeding either raises ResourceCapError.
struct Budget {
  std::size_t max_pairs = 10000;
  unsigned max_degree = 60;
  // Defaults overridden by WBF_BUDGET_PAIRS / WBF_BUDGET_DEGREE.
  static Budget from_env();
};

// Generators of a left ideal.
class IdealPresentation {
 public:
  IdealPresentation() = default;
  IdealPresentation(SignaturePtr sig, std::vector<WeylOperator> gens);

  const SignaturePtr& signature() const { return sig_; }
  const AlgebraSignature& sig() const { return *sig_; }
  const std::vector<WeylOperator>& generators() const { return gens_; }

 private:
  SignaturePtr sig_;
  std::vector<WeylOperator> gens_;
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t pairs_skipped = 0;
  std::size_t zero_reductions = 0;
};

struct GroebnerBasis {
  SignaturePtr signature;
  TermOrder order;
  // Monic, sorted by increasing leading monomial.
  std::vector<WeylOperator> elements;
  bool reduced = false;
  GroebnerStats stats;

  bool is_unit() const;
  std::vector<Monomial> leading_monomials() const;
};

GroebnerBasis buchberger(const IdealPresentation& ideal, const TermOrder& order,
                         const Budget& budget = Budget::from_env());

// Fully reduced remainder; P − NF(P) lies in the ideal.
WeylOperator normal_form(const WeylOperator& p, const GroebnerBasis& g);
bool in_ideal(const WeylOperator& p, const GroebnerBasis& g);
// Every S-polynomial reduces to zero.
bool is_groebner(const std::vector<WeylOperator>& elements, const TermOrder& order);

struct InitialIdeal {
  IdealPresentation ideal;
  GroebnerBasis basis;  // reduced, graded lexicographic order
  bool unit_ideal = false;
};

// in_{(−ω,ω)}(I) via a Gröbner basis of the homogenized ideal.
InitialIdeal initial_ideal(const IdealPresentation& ideal, const std::vector<Rational>& omega,
                           const Budget& budget = Budget::from_env());

// I ∩ (subalgebra without the given slots).
IdealPresentation eliminate(const IdealPresentation& ideal, const std::vector<std::size_t>& block,
                            const Budget& budget = Budget::from_env());

// (J : g) = {A : A·g ∈ J}.
IdealPresentation ideal_quotient(const IdealPresentation& j, const WeylOperator& g,
                                 const Budget& budget = Budget::from_env());

// Equality of left ideals by mutual membership.
bool same_ideal(const IdealPresentation& a, const IdealPresentation& b,
                const Budget& budget = Budget::from_env());
// Every generator of a lies in the ideal with basis g.
bool contains_all(const GroebnerBasis& g, const IdealPresentation& a);

}  // namespace wbf
