#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wbf/bfun.hpp"
#include "wbf/groebner.hpp"
#include "wbf/newton.hpp"

namespace wbf {

// ---------------------------------------------------------- closed forms

// f = x^p + y^q + Σ_j λ_j x^{p−j p/d} y^{j q/d} (d = gcd(p, q), |λ| = d−1 or λ empty),
// ℓ < 0. Generators: Euler operator and the Hamiltonian vector field.
IdealPresentation ann_cusp_family(long p, long q, const std::vector<Rational>& lambda, long ell);
// The polynomial of the family above.
Polynomial cusp_polynomial(long p, long q, const std::vector<Rational>& lambda = {});

// f = ∏ (x_i − a_i)^{α_i}
IdealPresentation ann_monomial_shift(const std::vector<Rational>& a, const std::vector<unsigned>& alpha, long ell);
Polynomial monomial_shift_polynomial(const std::vector<Rational>& a, const std::vector<unsigned>& alpha);

// f = (a_0 + a_1 x_1 + ⋯ + a_n x_n)^k. Returns the Euler-type operators (one
// per j with a_j ≠ 0) and the pairwise a_i ∂_j − a_j ∂_i.
IdealPresentation ann_linear_power(const std::vector<Rational>& a, unsigned k, long ell);
Polynomial linear_power_polynomial(const std::vector<Rational>& a, unsigned k);

// (t − f, ∂_i + (∂f/∂x_i) ∂_t) in D_{n+1}; t is the last coordinate.
IdealPresentation malgrange_ideal(const Polynomial& f);

// ---------------------------------------------------------- parametric route

// Ann(f^s) over D_n[s] (central parameter named "s").
struct ParametricAnnihilator {
  IdealPresentation ideal;
};

// ⟨σ + f ∂_t, ∂_i + (∂f/∂x_i) ∂_t⟩ in D_n ⊗ shift algebra, ∂_t eliminated, σ ↦ s.
ParametricAnnihilator bm_parametric_annihilator(const Polynomial& f, const Budget& budget = Budget::from_env());

// Smallest integer root of b, if any.
std::optional<long> min_integer_root(const BFunction& b);

// s ↦ ℓ. Requires ℓ ∉ α₀+1+ℕ, i.e. ℓ ≤ α₀; otherwise throws GuardError unless forced.
IdealPresentation specialize_parametric(const ParametricAnnihilator& a, long ell, std::optional<long> alpha0,
                                        bool force = false);
IdealPresentation specialize_parametric(const ParametricAnnihilator& a, long ell, const BFunction& bf,
                                        bool force = false);

// b_f(s) = (−1)^deg b(−s−1) with b the b-function of the Malgrange ideal for ω = (0,…,0,1).
BFunction bernstein_sato(const Polynomial& f, const Budget& budget = Budget::from_env());

// ---------------------------------------------------------- dispatcher

enum class AnnMethod { automatic, cusp, monomial_shift, linear_power, briancon_maisonobe, quotient };
AnnMethod parse_ann_method(const std::string& name);
std::string to_string(AnnMethod m);

struct AnnOptions {
  AnnMethod method = AnnMethod::automatic;
  std::optional<long> alpha0;  // smallest integer root of b_f, when known
  bool force = false;          // specialize even when the guard fails
  Budget budget = Budget::from_env();
};

struct AnnResult {
  IdealPresentation ideal;
  std::string route;  // human-readable description of how it was built
  std::optional<long> alpha0;
};

// Ann(f^ℓ) for integer ℓ.
//  ℓ ≥ 0: ((∂_1, …, ∂_n) : f^ℓ).
//  ℓ < 0: closed form when f matches one, else the parametric annihilator at s = ℓ,
//         or (Ann(f^{α₀}) : f^{ℓ−α₀}) when ℓ > α₀.
// An explicit briancon_maisonobe method always specializes the parametric
// annihilator, so ℓ > α₀ raises GuardError unless forced.
AnnResult annihilator(const Polynomial& f, long ell, const AnnOptions& opts = {});

// Recognizers used by the automatic method.
struct CuspMatch {
  long p = 0, q = 0;
  std::vector<Rational> lambda;
};
std::optional<CuspMatch> match_cusp_family(const Polynomial& f);

// ---------------------------------------------------------- proof constructions

// P_γ with P_γ • f = c_γ γ!, built by the recursion
//   P_γ = ∂^γ − Σ_{γ < γ' ∈ Supp f} x^{γ'−γ}/(γ'−γ)! · P_{γ'}.
WeylOperator pgamma_operator(const Polynomial& f, const MultiIndex& gamma);

struct Witness {
  WeylOperator op;       // element of Ann(f^ℓ)
  WeylOperator initial;  // its advertised (−ω, ω)-initial form
};
// Q_i (one per variable) and Q_v (one per basis vector of V_τ), ℓ ≥ 1.
std::vector<Witness> initial_membership_witnesses(const Polynomial& f, long ell, const std::vector<Rational>& omega);

// P • f^ℓ = 0 (P in plain D_n).
bool is_annihilator(const WeylOperator& p, const Polynomial& f, long ell);
bool annihilates_all(const IdealPresentation& ideal, const Polynomial& f, long ell);

// Replaces a central parameter by a value and drops it from the signature.
WeylOperator substitute_parameter(const WeylOperator& p, const std::string& name, const Rational& value,
                                  const SignaturePtr& target);

}  // namespace wbf
