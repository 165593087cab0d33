#include "wbf/poly.hpp"

#include <algorithm>
#include <sstream>

#include "wbf/errors.hpp"

namespace wbf {

// ---------------------------------------------------------------- MultiIndex

MultiIndex::MultiIndex(std::size_t n) : n_(static_cast<uint8_t>(n)) {
  if (n > kMaxVars) throw InputError("too many variables (max 16)");
}

MultiIndex::MultiIndex(std::initializer_list<unsigned> exps) : MultiIndex(exps.size()) {
  std::size_t i = 0;
  for (unsigned e : exps) set(i++, e);
}

MultiIndex MultiIndex::unit(std::size_t n, std::size_t i, unsigned power) {
  MultiIndex m(n);
  m.set(i, power);
  return m;
}

void MultiIndex::set(std::size_t i, unsigned value) {
  if (value > 0xFFFFu) throw Error("exponent overflow");
  e_[i] = static_cast<uint16_t>(value);
}

unsigned MultiIndex::total() const {
  unsigned t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += e_[i];
  return t;
}

Integer MultiIndex::factorial() const {
  Integer r = 1;
  for (std::size_t i = 0; i < n_; ++i) r *= wbf::factorial(e_[i]);
  return r;
}

bool MultiIndex::divides(const MultiIndex& other) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  MultiIndex r(*this);
  for (std::size_t i = 0; i < n_; ++i) r.set(i, unsigned(e_[i]) + o.e_[i]);
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
  MultiIndex r(*this);
  for (std::size_t i = 0; i < n_; ++i) {
    if (o.e_[i] > e_[i]) throw Error("negative exponent in multi-index difference");
    r.e_[i] = static_cast<uint16_t>(e_[i] - o.e_[i]);
  }
  return r;
}

MultiIndex MultiIndex::scaled(unsigned k) const {
  MultiIndex r(*this);
  for (std::size_t i = 0; i < n_; ++i) r.set(i, unsigned(e_[i]) * k);
  return r;
}

// ---------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(MultiIndex(nvars), c);
  return p;
}

Polynomial Polynomial::monomial(const MultiIndex& m, const Rational& c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  return monomial(MultiIndex::unit(nvars, i));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Rational Polynomial::coeff(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& m, const Rational& c) {
  if (m.size() != nvars_) throw InputError("monomial length does not match polynomial variable count");
  if (wbf::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (wbf::is_zero(it->second)) terms_.erase(it);
  }
}

void require_same_nvars(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) {
    throw InputError("variable-count mismatch: " + std::to_string(a.nvars()) + " vs " +
                     std::to_string(b.nvars()));
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_nvars(*this, o);
  Polynomial r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_nvars(*this, o);
  Polynomial r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_nvars(*this, o);
  Polynomial r(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma + mb, ca * cb);
  }
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(nvars_);
  if (wbf::is_zero(c)) return r;
  r.terms_ = terms_;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total());
  return d;
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

std::pair<MultiIndex, Rational> Polynomial::leading_grlex() const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  const std::pair<const MultiIndex, Rational>* best = nullptr;
  for (const auto& t : terms_) {
    if (best == nullptr || t.first.total() > best->first.total() ||
        (t.first.total() == best->first.total() && t.first > best->first)) {
      best = &t;
    }
  }
  return {best->first, best->second};
}

Polynomial Polynomial::derivative(std::size_t var) const {
  return partial_derive(*this, MultiIndex::unit(nvars_, var));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw InputError("evaluation point has wrong dimension");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), m[i]);
      mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), m[i]);
      v *= p;
    }
    total += v;
  }
  return total;
}

Polynomial poly_arith(ArithOp op, const Polynomial& a, const Polynomial& b) {
  return op == ArithOp::add ? a + b : a * b;
}

Polynomial partial_derive(const Polynomial& f, const MultiIndex& beta) {
  if (beta.size() != f.nvars()) throw InputError("derivative multi-index has wrong length");
  Polynomial r(f.nvars());
  for (const auto& [gamma, c] : f.terms()) {
    if (!beta.divides(gamma)) continue;
    MultiIndex rest = gamma - beta;
    r.add_term(rest, c * Rational(gamma.factorial() / rest.factorial()));
  }
  return r;
}

// ------------------------------------------------------- division and gcd

Polynomial make_monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p.scaled(1 / p.leading_grlex().second);
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  require_same_nvars(a, b);
  if (b.is_zero()) throw Error("division by zero polynomial");
  auto [lb, cb] = b.leading_grlex();
  Polynomial q(a.nvars());
  Polynomial r = a;
  while (!r.is_zero()) {
    auto [lr, cr] = r.leading_grlex();
    if (!lb.divides(lr)) throw Error("polynomial division is not exact");
    Polynomial t = Polynomial::monomial(lr - lb, cr / cb);
    q = q + t;
    r = r - t * b;
  }
  return q;
}

namespace {

int highest_var(const Polynomial& p) {
  int v = -1;
  for (const auto& [m, c] : p.terms()) {
    for (int i = static_cast<int>(p.nvars()) - 1; i > v; --i) {
      if (m[static_cast<std::size_t>(i)] > 0) {
        v = i;
        break;
      }
    }
  }
  return v;
}

// Coefficients of p viewed as a univariate polynomial in x_v.
std::vector<Polynomial> split(const Polynomial& p, std::size_t v) {
  std::vector<Polynomial> out(p.degree_in(v) + 1, Polynomial(p.nvars()));
  for (const auto& [m, c] : p.terms()) {
    MultiIndex rest = m;
    unsigned d = m[v];
    rest.set(v, 0);
    out[d].add_term(rest, c);
  }
  return out;
}

Polynomial shift_var(const Polynomial& p, std::size_t v, unsigned k) {
  if (k == 0) return p;
  return p * Polynomial::monomial(MultiIndex::unit(p.nvars(), v, k));
}

// Removes the rational content so coefficients are coprime integers.
Polynomial numeric_primitive(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer g = 0;
  Integer l = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  }
  return p.scaled(Rational(l, g));
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b);

Polynomial content_in(const Polynomial& p, std::size_t v) {
  Polynomial c(p.nvars());
  for (const auto& coeff : split(p, v)) {
    if (coeff.is_zero()) continue;
    c = c.is_zero() ? make_monic(coeff) : gcd_rec(c, coeff);
    if (c.is_constant()) break;
  }
  return c;
}

// Pseudo-remainder of a by b in x_v.
Polynomial prem(const Polynomial& a, const Polynomial& b, std::size_t v) {
  unsigned db = b.degree_in(v);
  Polynomial lcb = split(b, v).back();
  Polynomial r = a;
  unsigned da = a.degree_in(v);
  int e = static_cast<int>(da) - static_cast<int>(db) + 1;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    unsigned dr = r.degree_in(v);
    Polynomial lcr = split(r, v).back();
    r = r * lcb - shift_var(lcr * b, v, dr - db);
    --e;
  }
  for (; e > 0; --e) r = r * lcb;
  return r;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  int va = highest_var(a);
  int vb = highest_var(b);
  int vi = std::max(va, vb);
  if (vi < 0) return Polynomial::constant(a.nvars(), 1);
  auto v = static_cast<std::size_t>(vi);
  Polynomial ca = va == vi ? content_in(a, v) : make_monic(a);
  Polynomial cb = vb == vi ? content_in(b, v) : make_monic(b);
  Polynomial c = gcd_rec(ca, cb);
  if (va != vi || vb != vi) return c;

  Polynomial r0 = numeric_primitive(exact_divide(a, ca));
  Polynomial r1 = numeric_primitive(exact_divide(b, cb));
  if (r0.degree_in(v) < r1.degree_in(v)) std::swap(r0, r1);
  while (true) {
    Polynomial r = prem(r0, r1, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      r1 = Polynomial::constant(a.nvars(), 1);
      break;
    }
    r0 = std::move(r1);
    r1 = numeric_primitive(exact_divide(r, content_in(r, v)));
  }
  return make_monic(c * r1);
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  require_same_nvars(a, b);
  return gcd_rec(a, b);
}

// ---------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(const Polynomial& p)
    : num_(p), den_(Polynomial::constant(p.nvars(), 1)) {}

RationalFunction ratfun_reduce(const Polynomial& num, const Polynomial& den) {
  require_same_nvars(num, den);
  if (den.is_zero()) throw InputError("rational function with zero denominator");
  RationalFunction r;
  if (num.is_zero()) {
    r.num_ = Polynomial(num.nvars());
    r.den_ = Polynomial::constant(num.nvars(), 1);
    return r;
  }
  Polynomial g = gcd(num, den);
  Polynomial n = exact_divide(num, g);
  Polynomial d = exact_divide(den, g);
  Rational lc = d.leading_grlex().second;
  r.num_ = n.scaled(1 / lc);
  r.den_ = d.scaled(1 / lc);
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return ratfun_reduce(a.numerator() * b.denominator() + b.numerator() * a.denominator(),
                       a.denominator() * b.denominator());
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return ratfun_reduce(a.numerator() * b.numerator(), a.denominator() * b.denominator());
}

// ------------------------------------------------------------------ printing

namespace {

std::string var_name(std::size_t n, std::size_t i) {
  if (n <= 3) return std::string(1, "xyz"[i]);
  return "x" + std::to_string(i + 1);
}

}  // namespace

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<MultiIndex, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.total() != b.first.total()) return a.first.total() > b.first.total();
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || m.is_zero()) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << "*";
      os << var_name(p.nvars(), i);
      if (m[i] > 1) os << "^" << m[i];
      wrote = true;
    }
  }
  return os.str();
}

std::string to_string(const RationalFunction& g) {
  if (g.denominator().is_constant()) return to_string(g.numerator());
  return "(" + to_string(g.numerator()) + ")/(" + to_string(g.denominator()) + ")";
}

}  // namespace wbf
