#include "wbf/bfun.hpp"

#include <map>
#include <sstream>

#include "wbf/errors.hpp"
#include "wbf/newton.hpp"

namespace wbf {

BFunction::BFunction(const UPoly& p) {
  if (p.is_zero()) throw Error("b-function cannot be zero");
  poly = p.monic();
  UPoly rest = poly;
  if (poly.degree() > 0) {
    roots = rational_roots(poly);
    for (const auto& [r, m] : roots) {
      for (unsigned k = 0; k < m; ++k) rest = divmod(rest, UPoly::linear_root(r)).first;
    }
  }
  unresolved = rest.monic();
}

BFunction BFunction::from_roots(const std::vector<Rational>& rs) { return BFunction(UPoly::from_roots(rs)); }

bool BFunction::all_roots_simple() const {
  if (poly.degree() <= 0) return true;
  return gcd(poly, poly.derivative()).degree() == 0;
}

std::vector<Rational> BFunction::root_list() const {
  std::vector<Rational> out;
  for (const auto& [r, m] : roots) {
    for (unsigned k = 0; k < m; ++k) out.push_back(r);
  }
  return out;
}

std::string to_factored_string(const BFunction& b) {
  if (b.poly.degree() == 0) return "1";
  std::ostringstream os;
  for (const auto& [r, m] : b.roots) {
    if (sgn(r) == 0) {
      os << "s";
    } else {
      os << "(s" << (sgn(r) < 0 ? "+" : "-") << Rational(abs(r)).get_str() << ")";
    }
    if (m > 1) os << "^" << m;
  }
  if (b.unresolved.degree() > 0) os << "(" << to_string(b.unresolved) << ")";
  return os.str();
}

WeylOperator euler_symbol(const SignaturePtr& sig, const std::vector<Rational>& omega) {
  if (omega.size() != sig->n()) throw InputError("weight length does not match the number of variables");
  bool nonzero = false;
  WeylOperator s(sig);
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (sgn(omega[i]) == 0) continue;
    nonzero = true;
    Monomial m;
    m.e[sig->x_slot(i)] = 1;
    m.e[sig->d_slot(i)] = 1;
    s.add_term(m, omega[i]);
  }
  if (!nonzero) throw InputError("weight vector must be nonzero");
  return s;
}

BFunction minimal_polynomial(const GroebnerBasis& g, const std::vector<Rational>& omega, unsigned degree_cap) {
  if (g.is_unit()) return BFunction(UPoly::constant(1));
  const WeylOperator s = euler_symbol(g.signature, omega);

  struct Row {
    Monomial pivot;
    std::map<Monomial, Rational> vec;
    std::vector<Rational> comb;  // coefficients on s^0..s^k
  };
  std::vector<Row> rows;
  WeylOperator v = normal_form(WeylOperator::constant(g.signature, 1), g);
  for (unsigned k = 0; k <= degree_cap; ++k) {
    std::map<Monomial, Rational> vec(v.terms().begin(), v.terms().end());
    std::vector<Rational> comb(k + 1, Rational(0));
    comb[k] = 1;
    for (const auto& row : rows) {
      auto it = vec.find(row.pivot);
      if (it == vec.end()) continue;
      Rational c = it->second;
      for (const auto& [m, a] : row.vec) {
        Rational& slot = vec[m];
        slot -= c * a;
        if (sgn(slot) == 0) vec.erase(m);
      }
      for (std::size_t i = 0; i < row.comb.size(); ++i) comb[i] -= c * row.comb[i];
    }
    if (vec.empty()) return BFunction(UPoly(comb));
    Row r;
    r.pivot = vec.rbegin()->first;
    Rational inv = 1 / vec.rbegin()->second;
    for (auto& [m, a] : vec) a *= inv;
    for (auto& c : comb) c *= inv;
    r.vec = std::move(vec);
    r.comb = std::move(comb);
    rows.push_back(std::move(r));
    v = normal_form(s * v, g);
  }
  throw ResourceCapError("b-function degree cap " + std::to_string(degree_cap) + " exceeded");
}

BFunctionResult bfunction_with_initial(const IdealPresentation& ideal, const std::vector<Rational>& omega,
                                       unsigned degree_cap, const Budget& budget) {
  BFunctionResult r;
  r.initial = initial_ideal(ideal, omega, budget);
  r.b = minimal_polynomial(r.initial.basis, omega, degree_cap);
  return r;
}

BFunction bfunction(const IdealPresentation& ideal, const std::vector<Rational>& omega, unsigned degree_cap,
                    const Budget& budget) {
  return bfunction_with_initial(ideal, omega, degree_cap, budget).b;
}

// ---------------------------------------------------------------- predictors

namespace {

void require_pair(const std::vector<Rational>& omega) {
  if (omega.size() != 2) throw InputError("expected a weight in two variables");
  if (sgn(omega[0]) == 0 && sgn(omega[1]) == 0) throw InputError("weight vector must be nonzero");
}

}  // namespace

BFunction predict_order_line(const Polynomial& f, long ell, const std::vector<Rational>& omega) {
  return BFunction(UPoly::linear_root(Rational(ell) * ord_f(f, omega)));
}

BFunction predict_cusp_positive(long p, long q, long ell, const std::vector<Rational>& omega) {
  require_pair(omega);
  if (p <= 0 || q <= 0) throw InputError("exponents must be positive");
  if (ell < 0) throw InputError("this formula needs a nonnegative exponent");
  if (p * omega[0] <= q * omega[1]) return BFunction(UPoly::linear_root(Rational(p * ell) * omega[0]));
  return BFunction(UPoly::linear_root(Rational(q * ell) * omega[1]));
}

BFunction predict_cusp_negative(long p, long q, long ell, const std::vector<Rational>& omega) {
  require_pair(omega);
  if (p <= 0 || q <= 0) throw InputError("exponents must be positive");
  if (ell >= 0) throw InputError("this formula needs a negative exponent");
  const Rational w1 = omega[0], w2 = omega[1];
  const Rational P(p), Q(q), L(ell);
  Rational lhs = P * w1, rhs = Q * w2;
  if (lhs == rhs) return BFunction(UPoly::linear_root(L * P * w1));
  std::vector<Rational> roots;
  if (lhs > rhs) {
    roots.push_back(L * Q * w2);
    for (long i = 1; i < q; ++i) roots.push_back((L * P + P / Q * i) * w1 - Rational(i) * w2);
  } else {
    roots.push_back(L * P * w1);
    for (long i = 1; i < p; ++i) roots.push_back((L * Q + Q / P * i) * w2 - Rational(i) * w1);
  }
  return BFunction::from_roots(roots);
}

BFunction predict_quasi_homogeneous(const std::vector<Rational>& v, const Rational& d, long ell,
                                    const Rational& lambda) {
  if (sgn(lambda) == 0) throw InputError("scale factor must be nonzero");
  bool nonzero = false;
  for (const auto& x : v) nonzero = nonzero || sgn(x) != 0;
  if (!nonzero) throw InputError("weight vector must be nonzero");
  return BFunction(UPoly::linear_root(Rational(ell) * lambda * d));
}

BFunction predict_theta_ideal(long d, long i, long j, const std::vector<Rational>& omega) {
  require_pair(omega);
  if (j > i) throw InputError("need j <= i");
  UPoly p = UPoly::constant(1);
  for (long k = 0; k <= i - j; ++k) {
    p = p * UPoly::linear_root(-(omega[0] * (d - i + k) + omega[1] * (i - k)));
  }
  return BFunction(squarefree_part(p));
}

BFunction binary_homogeneous_bound(long d, const std::vector<Rational>& omega) {
  require_pair(omega);
  if (d < 0) throw InputError("degree must be nonnegative");
  UPoly p = UPoly::constant(1);
  for (long i = 0; i <= d; ++i) p = p * UPoly::linear_root(-(omega[0] * i + omega[1] * (d - i)));
  return BFunction(squarefree_part(p));
}

UPoly support_product(const Polynomial& f, const std::vector<Rational>& omega) {
  UPoly p = UPoly::constant(1);
  for (const auto& [g, c] : f.terms()) p = p * UPoly::linear_root(-dot(omega, g));
  return p;
}

}  // namespace wbf
