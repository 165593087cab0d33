#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wbf/groebner.hpp"
#include "wbf/upoly.hpp"

namespace wbf {

// Monic polynomial in s with its rational roots split off.
struct BFunction {
  UPoly poly;
  std::vector<std::pair<Rational, unsigned>> roots;  // decreasing
  UPoly unresolved;                                   // monic, no rational roots

  BFunction() = default;
  explicit BFunction(const UPoly& p);
  static BFunction from_roots(const std::vector<Rational>& roots);

  int degree() const { return poly.degree(); }
  bool is_one() const { return poly.degree() == 0; }
  bool has_root(const Rational& r) const { return sgn(poly.eval(r)) == 0; }
  bool all_roots_simple() const;
  std::vector<Rational> root_list() const;  // with multiplicity
  bool operator==(const BFunction& o) const { return poly == o.poly; }
};

// "(s+3)(s+10/3)(s+11/3)", "s(s-1)", "(s+1)^2", "1".
std::string to_factored_string(const BFunction& b);

// s = ω_1 x_1 ∂_1 + ⋯ + ω_n x_n ∂_n.
WeylOperator euler_symbol(const SignaturePtr& sig, const std::vector<Rational>& omega);

// Minimal polynomial of the Euler symbol modulo an ideal whose Gröbner basis is given.
// Degree 0 (b = 1) when the basis contains a unit.
BFunction minimal_polynomial(const GroebnerBasis& g, const std::vector<Rational>& omega,
                             unsigned degree_cap = 32);

struct BFunctionResult {
  BFunction b;
  InitialIdeal initial;
};

// b-function of I for the weight (−ω, ω).
BFunctionResult bfunction_with_initial(const IdealPresentation& ideal, const std::vector<Rational>& omega,
                                       unsigned degree_cap = 32, const Budget& budget = Budget::from_env());
BFunction bfunction(const IdealPresentation& ideal, const std::vector<Rational>& omega,
                    unsigned degree_cap = 32, const Budget& budget = Budget::from_env());

// ---------------------------------------------------------------- predictors

// s − ℓ·ord_f(ω); the b-function of Ann(f^ℓ) for ℓ ≥ 0, and for linear
// powers and products of shifted coordinate powers for every integer ℓ.
BFunction predict_order_line(const Polynomial& f, long ell, const std::vector<Rational>& omega);
// x^p + y^q with ℓ ≥ 0.
BFunction predict_cusp_positive(long p, long q, long ell, const std::vector<Rational>& omega);
// x^p + y^q with ℓ < 0.
BFunction predict_cusp_negative(long p, long q, long ell, const std::vector<Rational>& omega);
// Quasi-homogeneous f of weighted degree d for v, with ω = λv: s − ℓλd.
BFunction predict_quasi_homogeneous(const std::vector<Rational>& v, const Rational& d, long ell,
                                    const Rational& lambda);
// Ideal generated by θ_1+θ_2+d and (θ_k+j)⋯(θ_k+i) in D_2.
BFunction predict_theta_ideal(long d, long i, long j, const std::vector<Rational>& omega);
// Squarefree part of ∏_{i=0}^{d} (s + iω_1 + (d−i)ω_2).
BFunction binary_homogeneous_bound(long d, const std::vector<Rational>& omega);

// Product of (s + ⟨ω, γ⟩) over the support of f (no reduction).
UPoly support_product(const Polynomial& f, const std::vector<Rational>& omega);

}  // namespace wbf
