#include "wbf/ann.hpp"

#include <map>
#include <numeric>

#include "wbf/errors.hpp"

namespace wbf {

namespace {

SignaturePtr plain_sig(std::size_t n) { return AlgebraSignature::weyl(n); }

WeylOperator x_power(const SignaturePtr& sig, const MultiIndex& a, const Rational& c = 1) {
  Monomial m;
  for (std::size_t i = 0; i < a.size(); ++i) m.e[sig->x_slot(i)] = static_cast<uint16_t>(a[i]);
  return WeylOperator::monomial(sig, m, c);
}

WeylOperator d_power(const SignaturePtr& sig, const MultiIndex& b, const Rational& c = 1) {
  Monomial m;
  for (std::size_t i = 0; i < b.size(); ++i) m.e[sig->d_slot(i)] = static_cast<uint16_t>(b[i]);
  return WeylOperator::monomial(sig, m, c);
}

WeylOperator xd(const SignaturePtr& sig, std::size_t i, const Rational& c = 1) {
  Monomial m;
  m.e[sig->x_slot(i)] = 1;
  m.e[sig->d_slot(i)] = 1;
  return WeylOperator::monomial(sig, m, c);
}

// Polynomial in the first f.nvars() coordinates of sig.
WeylOperator embed(const SignaturePtr& sig, const Polynomial& f) {
  WeylOperator r(sig);
  for (const auto& [g, c] : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < g.size(); ++i) m.e[sig->x_slot(i)] = static_cast<uint16_t>(g[i]);
    r.add_term(m, c);
  }
  return r;
}

Rational rpow(const Rational& b, unsigned e) {
  Rational r = 1;
  for (unsigned k = 0; k < e; ++k) r *= b;
  return r;
}

}  // namespace

// ---------------------------------------------------------- closed forms

Polynomial cusp_polynomial(long p, long q, const std::vector<Rational>& lambda) {
  if (p < 1 || q < 1) throw InputError("exponents must be positive");
  Polynomial f(2);
  f.add_term(MultiIndex{static_cast<unsigned>(p), 0}, 1);
  f.add_term(MultiIndex{0, static_cast<unsigned>(q)}, 1);
  if (!lambda.empty()) {
    long d = std::gcd(p, q);
    if (static_cast<long>(lambda.size()) != d - 1) throw InputError("deformation needs gcd(p,q)-1 coefficients");
    long p1 = p / d, q1 = q / d;
    for (long j = 1; j < d; ++j) {
      f.add_term(MultiIndex{static_cast<unsigned>(p - j * p1), static_cast<unsigned>(j * q1)},
                 lambda[static_cast<std::size_t>(j - 1)]);
    }
  }
  return f;
}

IdealPresentation ann_cusp_family(long p, long q, const std::vector<Rational>& lambda, long ell) {
  if (ell >= 0) {
    throw GuardError("closed form holds only for exponents outside the naturals (smallest integer root -1)", -1);
  }
  if (p < 1 || q < 1) throw InputError("exponents must be positive");
  auto sig = plain_sig(2);
  const Rational L(ell);
  if (lambda.empty()) {
    WeylOperator h = x_power(sig, {static_cast<unsigned>(p - 1), 0}, p) * WeylOperator::d(sig, 1) -
                     x_power(sig, {0, static_cast<unsigned>(q - 1)}, q) * WeylOperator::d(sig, 0);
    WeylOperator e = xd(sig, 0, q) + xd(sig, 1, p) - WeylOperator::constant(sig, L * p * q);
    return IdealPresentation(sig, {h, e});
  }
  long d = std::gcd(p, q);
  if (d < 2) throw InputError("coprime exponents admit no quasi-homogeneous deformation");
  Polynomial f = cusp_polynomial(p, q, lambda);
  WeylOperator fx = embed(sig, f.derivative(0));
  WeylOperator fy = embed(sig, f.derivative(1));
  WeylOperator h = fy * WeylOperator::d(sig, 0) - fx * WeylOperator::d(sig, 1);
  long p1 = p / d, q1 = q / d;
  WeylOperator e = xd(sig, 0, q1) + xd(sig, 1, p1) - WeylOperator::constant(sig, L * Rational(p * q / d));
  return IdealPresentation(sig, {e, h});
}

Polynomial monomial_shift_polynomial(const std::vector<Rational>& a, const std::vector<unsigned>& alpha) {
  if (a.size() != alpha.size()) throw InputError("shift and exponent vectors differ in length");
  const std::size_t n = a.size();
  Polynomial f = Polynomial::constant(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial lin = Polynomial::variable(n, i) - Polynomial::constant(n, a[i]);
    f = f * lin.pow(alpha[i]);
  }
  return f;
}

IdealPresentation ann_monomial_shift(const std::vector<Rational>& a, const std::vector<unsigned>& alpha, long ell) {
  if (a.size() != alpha.size()) throw InputError("shift and exponent vectors differ in length");
  if (a.empty()) throw InputError("need at least one variable");
  auto sig = plain_sig(a.size());
  std::vector<WeylOperator> gens;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (alpha[i] == 0) {
      gens.push_back(WeylOperator::d(sig, i));
      continue;
    }
    WeylOperator g = xd(sig, i) - WeylOperator::d(sig, i).scaled(a[i]) -
                     WeylOperator::constant(sig, Rational(ell) * alpha[i]);
    gens.push_back(g);
  }
  return IdealPresentation(sig, gens);
}

Polynomial linear_power_polynomial(const std::vector<Rational>& a, unsigned k) {
  if (a.size() < 2) throw InputError("need a constant term and at least one coefficient");
  const std::size_t n = a.size() - 1;
  Polynomial lin = Polynomial::constant(n, a[0]);
  for (std::size_t i = 0; i < n; ++i) lin = lin + Polynomial::variable(n, i).scaled(a[i + 1]);
  return lin.pow(k);
}

IdealPresentation ann_linear_power(const std::vector<Rational>& a, unsigned k, long ell) {
  if (a.size() < 2) throw InputError("need a constant term and at least one coefficient");
  if (k == 0) throw InputError("power must be positive");
  const std::size_t n = a.size() - 1;
  bool any = false;
  for (std::size_t j = 1; j <= n; ++j) any = any || sgn(a[j]) != 0;
  if (!any) throw InputError("all linear coefficients are zero");
  auto sig = plain_sig(n);
  const Rational L = Rational(ell) * k;
  WeylOperator euler(sig);
  for (std::size_t i = 0; i < n; ++i) euler = euler + xd(sig, i);
  std::vector<WeylOperator> gens;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(a[j + 1]) == 0) continue;
    gens.push_back(euler + WeylOperator::d(sig, j).scaled(a[0] / a[j + 1]) - WeylOperator::constant(sig, L));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      WeylOperator g = WeylOperator::d(sig, j).scaled(a[i + 1]) - WeylOperator::d(sig, i).scaled(a[j + 1]);
      if (!g.is_zero()) gens.push_back(g);
    }
  }
  return IdealPresentation(sig, gens);
}

IdealPresentation malgrange_ideal(const Polynomial& f) {
  if (f.is_zero()) throw InputError("zero polynomial");
  const std::size_t n = f.nvars();
  auto names = AlgebraSignature::default_names(n);
  std::string t = "t";
  while (std::find(names.begin(), names.end(), t) != names.end()) t += "0";
  names.push_back(t);
  auto sig = make_signature(names);
  std::vector<WeylOperator> gens;
  gens.push_back(WeylOperator::x(sig, n) - embed(sig, f));
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(WeylOperator::d(sig, i) + embed(sig, f.derivative(i)) * WeylOperator::d(sig, n));
  }
  return IdealPresentation(sig, gens);
}

// ---------------------------------------------------------- parametric route

ParametricAnnihilator bm_parametric_annihilator(const Polynomial& f, const Budget& budget) {
  if (f.is_zero()) throw InputError("zero polynomial");
  const std::size_t n = f.nvars();
  auto names = AlgebraSignature::default_names(n);
  auto ssig = make_signature(names, {}, true);
  std::vector<WeylOperator> gens;
  gens.push_back(WeylOperator::sigma(ssig) + embed(ssig, f) * WeylOperator::dt(ssig));
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(WeylOperator::d(ssig, i) + embed(ssig, f.derivative(i)) * WeylOperator::dt(ssig));
  }
  IdealPresentation elim = eliminate(IdealPresentation(ssig, gens), {ssig->dt_slot()}, budget);

  auto target = make_signature(names, {"s"});
  std::vector<int> slot_map(ssig->slots(), -1);
  for (std::size_t i = 0; i < n; ++i) {
    slot_map[ssig->x_slot(i)] = static_cast<int>(target->x_slot(i));
    slot_map[ssig->d_slot(i)] = static_cast<int>(target->d_slot(i));
  }
  slot_map[ssig->sigma_slot()] = static_cast<int>(target->param_slot(0));
  std::vector<WeylOperator> out;
  for (const auto& g : elim.generators()) out.push_back(g.rebased(target, slot_map));
  return ParametricAnnihilator{IdealPresentation(target, out)};
}

WeylOperator substitute_parameter(const WeylOperator& p, const std::string& name, const Rational& value,
                                  const SignaturePtr& target) {
  const AlgebraSignature& src = p.sig();
  int k = src.param_index(name);
  if (k < 0) throw SignatureError("operator has no parameter named " + name);
  const std::size_t pslot = static_cast<std::size_t>(k);
  std::vector<int> slot_map(src.slots(), -1);
  for (std::size_t i = 0; i < src.n(); ++i) {
    slot_map[src.x_slot(i)] = static_cast<int>(target->x_slot(i));
    slot_map[src.d_slot(i)] = static_cast<int>(target->d_slot(i));
  }
  for (std::size_t j = 0; j < src.params().size(); ++j) {
    if (src.param_slot(j) == pslot) continue;
    int tj = target->param_index(src.params()[j]);
    if (tj >= 0) slot_map[src.param_slot(j)] = tj;
  }
  WeylOperator r(target);
  for (const auto& [m, c] : p.terms()) {
    Monomial mm = m;
    unsigned e = mm.e[pslot];
    mm.e[pslot] = 0;
    WeylOperator term = WeylOperator::monomial(p.signature(), mm, c * rpow(value, e));
    r = r + term.rebased(target, slot_map);
  }
  return r;
}

std::optional<long> min_integer_root(const BFunction& b) {
  std::optional<long> best;
  for (const auto& [r, m] : b.roots) {
    if (r.get_den() != 1) continue;
    long v = r.get_num().get_si();
    if (!best || v < *best) best = v;
  }
  return best;
}

IdealPresentation specialize_parametric(const ParametricAnnihilator& a, long ell, std::optional<long> alpha0,
                                        bool force) {
  if (alpha0 && ell > *alpha0 && !force) {
    throw GuardError("exponent " + std::to_string(ell) + " lies in alpha0+1+N for alpha0 = " +
                         std::to_string(*alpha0) + "; specialization is not guaranteed",
                     *alpha0);
  }
  auto target = plain_sig(a.ideal.sig().n());
  std::vector<WeylOperator> out;
  for (const auto& g : a.ideal.generators()) {
    WeylOperator h = substitute_parameter(g, "s", Rational(ell), target);
    if (!h.is_zero()) out.push_back(h);
  }
  return IdealPresentation(target, out);
}

IdealPresentation specialize_parametric(const ParametricAnnihilator& a, long ell, const BFunction& bf, bool force) {
  return specialize_parametric(a, ell, min_integer_root(bf), force);
}

BFunction bernstein_sato(const Polynomial& f, const Budget& budget) {
  if (f.is_constant()) throw InputError("Bernstein-Sato polynomial needs a nonconstant polynomial");
  IdealPresentation mal = malgrange_ideal(f);
  std::vector<Rational> omega(f.nvars() + 1, Rational(0));
  omega.back() = 1;
  BFunction b = bfunction(mal, omega, 32, budget);
  return BFunction(b.poly.substitute_affine(-1, -1));
}

// ---------------------------------------------------------- dispatcher

AnnMethod parse_ann_method(const std::string& name) {
  if (name == "auto" || name == "automatic") return AnnMethod::automatic;
  if (name == "cusp") return AnnMethod::cusp;
  if (name == "monomial" || name == "monomial_shift" || name == "monomial-shift") return AnnMethod::monomial_shift;
  if (name == "linear" || name == "linear_power" || name == "linear-power") return AnnMethod::linear_power;
  if (name == "bm" || name == "briancon_maisonobe") return AnnMethod::briancon_maisonobe;
  if (name == "quotient") return AnnMethod::quotient;
  throw InputError("unknown method '" + name + "'");
}

std::string to_string(AnnMethod m) {
  switch (m) {
    case AnnMethod::automatic: return "auto";
    case AnnMethod::cusp: return "cusp";
    case AnnMethod::monomial_shift: return "monomial_shift";
    case AnnMethod::linear_power: return "linear_power";
    case AnnMethod::briancon_maisonobe: return "briancon_maisonobe";
    case AnnMethod::quotient: return "quotient";
  }
  return "?";
}

std::optional<CuspMatch> match_cusp_family(const Polynomial& f) {
  if (f.nvars() != 2) return std::nullopt;
  long p = 0, q = 0;
  for (const auto& [g, c] : f.terms()) {
    if (g[1] == 0 && g[0] > 0 && c == 1) p = g[0];
    if (g[0] == 0 && g[1] > 0 && c == 1) q = g[1];
  }
  if (p < 2 || q < 2) return std::nullopt;
  long d = std::gcd(p, q);
  long p1 = p / d, q1 = q / d;
  CuspMatch m{p, q, std::vector<Rational>(static_cast<std::size_t>(d - 1), Rational(0))};
  bool deformed = false;
  for (const auto& [g, c] : f.terms()) {
    if ((g[0] == p && g[1] == 0) || (g[0] == 0 && g[1] == q)) continue;
    if (g[1] % q1 != 0) return std::nullopt;
    long j = g[1] / q1;
    if (j < 1 || j >= d || g[0] != p - j * p1) return std::nullopt;
    m.lambda[static_cast<std::size_t>(j - 1)] = c;
    deformed = true;
  }
  if (!deformed) m.lambda.clear();
  return m;
}

namespace {

struct ShiftMatch {
  std::vector<Rational> a;
  std::vector<unsigned> alpha;
};

std::optional<ShiftMatch> match_monomial_shift(const Polynomial& f) {
  const std::size_t n = f.nvars();
  if (f.is_constant()) return std::nullopt;
  MultiIndex top(n);
  ShiftMatch m;
  for (std::size_t i = 0; i < n; ++i) {
    top.set(i, f.degree_in(i));
    m.alpha.push_back(f.degree_in(i));
  }
  Rational c = f.coeff(top);
  if (sgn(c) == 0) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) {
    if (m.alpha[i] == 0) {
      m.a.push_back(0);
      continue;
    }
    MultiIndex below = top - MultiIndex::unit(n, i);
    m.a.push_back(-f.coeff(below) / (c * m.alpha[i]));
  }
  if (monomial_shift_polynomial(m.a, m.alpha).scaled(c) != f) return std::nullopt;
  return m;
}

struct LinearMatch {
  std::vector<Rational> a;
  unsigned k = 0;
};

std::optional<LinearMatch> match_linear_power(const Polynomial& f) {
  const std::size_t n = f.nvars();
  unsigned k = f.total_degree();
  if (k == 0) return std::nullopt;
  for (std::size_t j = 0; j < n; ++j) {
    if (f.degree_in(j) != k) continue;
    Polynomial lin = partial_derive(f, MultiIndex::unit(n, j, k - 1));
    if (lin.total_degree() != 1) return std::nullopt;
    LinearMatch m;
    m.k = k;
    MultiIndex zero(n);
    m.a.push_back(lin.coeff(zero));
    for (std::size_t i = 0; i < n; ++i) m.a.push_back(lin.coeff(MultiIndex::unit(n, i)));
    Polynomial cand = linear_power_polynomial(m.a, k);
    Rational scale = f.leading_grlex().second / cand.leading_grlex().second;
    if (cand.scaled(scale) != f) return std::nullopt;
    return m;
  }
  return std::nullopt;
}

IdealPresentation ann_one(std::size_t n) {
  auto sig = plain_sig(n);
  std::vector<WeylOperator> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(WeylOperator::d(sig, i));
  return IdealPresentation(sig, gens);
}

}  // namespace

AnnResult annihilator(const Polynomial& f, long ell, const AnnOptions& opts) {
  if (f.is_zero()) throw InputError("zero polynomial");
  if (f.nvars() == 0) throw InputError("need at least one variable");
  const std::size_t n = f.nvars();
  auto sig = plain_sig(n);
  AnnResult res;

  if (opts.method == AnnMethod::cusp) {
    auto m = match_cusp_family(f);
    if (!m) throw InputError("polynomial is not of the form x^p + y^q (+ quasi-homogeneous terms)");
    res.ideal = ann_cusp_family(m->p, m->q, m->lambda, ell);
    res.route = "closed form (cusp family)";
    res.alpha0 = -1;
    return res;
  }
  if (opts.method == AnnMethod::monomial_shift) {
    auto m = match_monomial_shift(f);
    if (!m) throw InputError("polynomial is not a product of shifted coordinate powers");
    res.ideal = ann_monomial_shift(m->a, m->alpha, ell);
    res.route = "closed form (shifted monomial)";
    return res;
  }
  if (opts.method == AnnMethod::linear_power) {
    auto m = match_linear_power(f);
    if (!m) throw InputError("polynomial is not a power of a linear form");
    res.ideal = ann_linear_power(m->a, m->k, ell);
    res.route = "closed form (power of a linear form)";
    return res;
  }

  const bool bm = opts.method == AnnMethod::briancon_maisonobe;
  if ((ell == 0 && !bm) || f.is_constant()) {
    res.ideal = ann_one(n);
    res.route = "Ann(1)";
    return res;
  }
  if (ell > 0 && !bm) {
    res.ideal = ideal_quotient(ann_one(n), WeylOperator::from_polynomial(sig, f.pow(static_cast<unsigned>(ell))),
                               opts.budget);
    res.route = "quotient (d_1..d_n) : f^" + std::to_string(ell);
    return res;
  }

  if (opts.method == AnnMethod::automatic) {
    if (auto m = match_cusp_family(f); m && m->lambda.empty()) {
      res.ideal = ann_cusp_family(m->p, m->q, {}, ell);
      res.route = "closed form (cusp family)";
      res.alpha0 = -1;
      return res;
    }
    if (auto m = match_monomial_shift(f)) {
      res.ideal = ann_monomial_shift(m->a, m->alpha, ell);
      res.route = "closed form (shifted monomial)";
      return res;
    }
    if (auto m = match_linear_power(f)) {
      res.ideal = ann_linear_power(m->a, m->k, ell);
      res.route = "closed form (power of a linear form)";
      return res;
    }
  }

  ParametricAnnihilator par = bm_parametric_annihilator(f, opts.budget);
  std::optional<long> alpha0 = opts.alpha0;
  if (!alpha0) alpha0 = min_integer_root(bernstein_sato(f, opts.budget));
  res.alpha0 = alpha0;
  if (bm || !alpha0 || ell <= *alpha0 || opts.force) {
    res.ideal = specialize_parametric(par, ell, alpha0, opts.force);
    res.route = "parametric annihilator at s = " + std::to_string(ell);
    if (alpha0 && ell > *alpha0) res.route += " (forced past the guard; unsound)";
    return res;
  }
  IdealPresentation base = specialize_parametric(par, *alpha0, alpha0);
  unsigned k = static_cast<unsigned>(ell - *alpha0);
  res.ideal = ideal_quotient(base, WeylOperator::from_polynomial(sig, f.pow(k)), opts.budget);
  res.route = "quotient Ann(f^" + std::to_string(*alpha0) + ") : f^" + std::to_string(k);
  return res;
}

// ---------------------------------------------------------- proof constructions

WeylOperator pgamma_operator(const Polynomial& f, const MultiIndex& gamma) {
  if (sgn(f.coeff(gamma)) == 0) throw InputError("exponent is not in the support");
  const std::size_t n = f.nvars();
  auto sig = plain_sig(n);
  std::map<MultiIndex, WeylOperator> memo;
  auto build = [&](const MultiIndex& g, auto&& self) -> WeylOperator {
    auto it = memo.find(g);
    if (it != memo.end()) return it->second;
    WeylOperator p = d_power(sig, g);
    for (const auto& [g1, c1] : f.terms()) {
      if (g1 == g || !g.divides(g1)) continue;
      MultiIndex diff = g1 - g;
      p = p - x_power(sig, diff, Rational(1) / Rational(diff.factorial())) * self(g1, self);
    }
    memo.emplace(g, p);
    return p;
  };
  return build(gamma, build);
}

std::vector<Witness> initial_membership_witnesses(const Polynomial& f, long ell, const std::vector<Rational>& omega) {
  if (ell < 1) throw InputError("witnesses are built for positive exponents");
  const std::size_t n = f.nvars();
  auto sig = plain_sig(n);
  Polynomial g = f.pow(static_cast<unsigned>(ell));
  FaceData fd = face_data(g, omega);
  const MultiIndex gt = fd.face.members.front();
  const Rational ct = g.coeff(gt);
  const Rational norm = 1 / (ct * Rational(gt.factorial()));
  WeylOperator pg = pgamma_operator(g, gt);
  std::vector<Witness> out;

  for (std::size_t i = 0; i < n; ++i) {
    unsigned lam = 0;
    for (const auto& m : fd.face.members) lam = std::max(lam, m[i]);
    MultiIndex shift = MultiIndex::unit(n, i, lam + 1);
    WeylOperator q = d_power(sig, shift);
    for (const auto& [gm, c] : g.terms()) {
      if (gm[i] < lam + 1) continue;
      MultiIndex rest = gm - shift;
      Rational k = c * Rational(gm.factorial()) / Rational(rest.factorial()) * norm;
      q = q - x_power(sig, rest, k) * pg;
    }
    out.push_back({q, d_power(sig, shift)});
  }

  for (const auto& v : face_dual_space(g, fd.face)) {
    WeylOperator e(sig);
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(v[j]) != 0) e = e + xd(sig, j, v[j]);
    }
    e = e - WeylOperator::constant(sig, dot(v, gt));
    WeylOperator q = e;
    for (const auto& [gm, c] : g.terms()) {
      if (dot(omega, gm) == fd.ord) continue;
      RVec diff(n);
      for (std::size_t j = 0; j < n; ++j) diff[j] = Rational(long(gm[j]) - long(gt[j]));
      Rational vd = 0;
      for (std::size_t j = 0; j < n; ++j) vd += v[j] * diff[j];
      if (sgn(vd) == 0) continue;
      q = q - x_power(sig, gm, c * vd * norm) * pg;
    }
    out.push_back({q, e});
  }
  return out;
}

bool is_annihilator(const WeylOperator& p, const Polynomial& f, long ell) {
  if (f.is_zero()) throw InputError("zero polynomial");
  if (ell >= 0) return apply_to_poly(p, f.pow(static_cast<unsigned>(ell))).is_zero();
  Polynomial one = Polynomial::constant(f.nvars(), 1);
  return apply_numerator(p, one, f.pow(static_cast<unsigned>(-ell))).is_zero();
}

bool annihilates_all(const IdealPresentation& ideal, const Polynomial& f, long ell) {
  for (const auto& g : ideal.generators()) {
    if (!is_annihilator(g, f, ell)) return false;
  }
  return true;
}

}  // namespace wbf
