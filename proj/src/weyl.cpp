#include "wbf/weyl.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "wbf/errors.hpp"

namespace wbf {

// ----------------------------------------------------------------- signature

AlgebraSignature::AlgebraSignature(std::vector<std::string> xs, std::vector<std::string> params,
                                   bool shift, bool homogenized)
    : xs_(std::move(xs)), params_(std::move(params)), shift_(shift), homogenized_(homogenized) {
  if (slots() > kMaxVars) throw InputError("algebra has too many variables (max 16 slots)");
  std::set<std::string> seen;
  for (std::size_t s = 0; s < slots(); ++s) {
    if (!seen.insert(slot_name(s)).second) {
      throw InputError("duplicate variable name '" + slot_name(s) + "' in algebra signature");
    }
  }
  if (homogenized_ && h_slot() < 0) throw InputError("homogenized algebra needs a parameter named h");
}

std::vector<std::string> AlgebraSignature::default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(n <= 3 ? std::string(1, "xyz"[i]) : "x" + std::to_string(i + 1));
  }
  return names;
}

SignaturePtr AlgebraSignature::weyl(std::size_t n) { return make_signature(default_names(n)); }

SignaturePtr make_signature(std::vector<std::string> xs, std::vector<std::string> params, bool shift,
                            bool homogenized) {
  return std::make_shared<const AlgebraSignature>(std::move(xs), std::move(params), shift,
                                                  homogenized);
}

int AlgebraSignature::param_index(const std::string& name) const {
  for (std::size_t k = 0; k < params_.size(); ++k) {
    if (params_[k] == name) return static_cast<int>(param_slot(k));
  }
  return -1;
}

int AlgebraSignature::h_slot() const { return param_index("h"); }

std::string AlgebraSignature::slot_name(std::size_t slot) const {
  if (slot < n()) return xs_[slot];
  if (slot < n() + params_.size()) return params_[slot - n()];
  if (shift_ && slot == sigma_slot()) return "sigma";
  if (slot < alpha_size() + n()) return "d" + xs_[slot - alpha_size()];
  return "dt";
}

// ----------------------------------------------------------------- monomials

unsigned Monomial::degree(std::size_t slots) const {
  unsigned d = 0;
  for (std::size_t i = 0; i < slots; ++i) d += e[i];
  return d;
}

bool Monomial::is_one() const {
  for (auto v : e) {
    if (v != 0) return false;
  }
  return true;
}

bool mono_divides(const Monomial& a, const Monomial& b, std::size_t slots) {
  if (a.comp != b.comp) return false;
  for (std::size_t i = 0; i < slots; ++i) {
    if (a.e[i] > b.e[i]) return false;
  }
  return true;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b, std::size_t slots) {
  Monomial r = a;
  for (std::size_t i = 0; i < slots; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

Monomial mono_quotient(const Monomial& b, const Monomial& a, std::size_t slots) {
  Monomial r;
  for (std::size_t i = 0; i < slots; ++i) r.e[i] = static_cast<uint16_t>(b.e[i] - a.e[i]);
  return r;
}

namespace {

void bump(Monomial& m, std::size_t slot, long delta) {
  long v = static_cast<long>(m.e[slot]) + delta;
  if (v < 0 || v > 0xFFFF) throw Error("exponent out of range");
  m.e[slot] = static_cast<uint16_t>(v);
}

}  // namespace

void multiply_monomials(const AlgebraSignature& sig, const Monomial& a, const Monomial& b,
                        std::vector<std::pair<Monomial, Integer>>& out) {
  const std::size_t n = sig.n();
  const std::size_t slots = sig.slots();
  const int h = sig.homogenized() ? sig.h_slot() : -1;

  Monomial base;
  base.comp = b.comp;
  for (std::size_t s = 0; s < slots; ++s) base.e[s] = 0;
  for (std::size_t s = 0; s < slots; ++s) {
    unsigned v = unsigned(a.e[s]) + b.e[s];
    if (v > 0xFFFF) throw Error("exponent overflow in product");
    base.e[s] = static_cast<uint16_t>(v);
  }

  // Per-pair Leibniz factors: ∂_i^p x_i^c = Σ_j C(p,j) C(c,j) j! x_i^{c−j} ∂_i^{p−j} (h^{2j}).
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.e[sig.d_slot(i)] > 0 && b.e[sig.x_slot(i)] > 0) active.push_back(i);
  }
  const bool shift_active =
      sig.has_shift_pair() && a.e[sig.dt_slot()] > 0 && b.e[sig.sigma_slot()] > 0;

  if (active.empty() && !shift_active) {
    out.emplace_back(base, Integer(1));
    return;
  }

  struct Choice {
    long j;
    Integer c;
  };
  std::vector<std::vector<Choice>> factors;
  for (std::size_t i : active) {
    long p = a.e[sig.d_slot(i)];
    long c = b.e[sig.x_slot(i)];
    std::vector<Choice> opts;
    Integer coef = 1;
    for (long j = 0; j <= std::min(p, c); ++j) {
      opts.push_back({j, coef});
      coef = coef * (p - j) * (c - j) / (j + 1);
    }
    factors.push_back(std::move(opts));
  }
  // ∂_t^k σ^f = Σ_m C(f,m) (−k)^{f−m} σ^m ∂_t^k
  std::vector<Choice> shift_opts;
  if (shift_active) {
    long k = a.e[sig.dt_slot()];
    long f = b.e[sig.sigma_slot()];
    for (long m = 0; m <= f; ++m) {
      Integer c = binomial(static_cast<unsigned>(f), static_cast<unsigned>(m));
      Integer pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(f - m));
      if ((f - m) % 2 == 1) pw = -pw;
      shift_opts.push_back({f - m, c * pw});
    }
  }

  std::vector<std::size_t> idx(factors.size(), 0);
  while (true) {
    Monomial m = base;
    Integer c = 1;
    for (std::size_t t = 0; t < factors.size(); ++t) {
      const Choice& ch = factors[t][idx[t]];
      std::size_t i = active[t];
      bump(m, sig.x_slot(i), -ch.j);
      bump(m, sig.d_slot(i), -ch.j);
      if (h >= 0) bump(m, static_cast<std::size_t>(h), 2 * ch.j);
      c *= ch.c;
    }
    if (shift_active) {
      for (const Choice& ch : shift_opts) {
        Monomial ms = m;
        bump(ms, sig.sigma_slot(), -ch.j);
        out.emplace_back(ms, c * ch.c);
      }
    } else {
      out.emplace_back(m, c);
    }
    std::size_t t = 0;
    while (t < idx.size() && ++idx[t] == factors[t].size()) idx[t++] = 0;
    if (t == idx.size()) break;
  }
}

// ------------------------------------------------------------- WeylOperator

WeylOperator WeylOperator::constant(SignaturePtr sig, const Rational& c) {
  WeylOperator p(std::move(sig));
  p.add_term(Monomial{}, c);
  return p;
}

WeylOperator WeylOperator::monomial(SignaturePtr sig, const Monomial& m, const Rational& c) {
  WeylOperator p(std::move(sig));
  p.add_term(m, c);
  return p;
}

namespace {

WeylOperator slot_operator(SignaturePtr sig, std::size_t slot) {
  Monomial m;
  m.e[slot] = 1;
  return WeylOperator::monomial(std::move(sig), m);
}

}  // namespace

WeylOperator WeylOperator::x(SignaturePtr sig, std::size_t i) {
  if (i >= sig->n()) throw InputError("x index out of range");
  std::size_t slot = sig->x_slot(i);
  return slot_operator(std::move(sig), slot);
}

WeylOperator WeylOperator::d(SignaturePtr sig, std::size_t i) {
  if (i >= sig->n()) throw InputError("d index out of range");
  std::size_t slot = sig->d_slot(i);
  return slot_operator(std::move(sig), slot);
}

WeylOperator WeylOperator::param(SignaturePtr sig, const std::string& name) {
  int slot = sig->param_index(name);
  if (slot < 0) throw InputError("algebra has no parameter named '" + name + "'");
  return slot_operator(std::move(sig), static_cast<std::size_t>(slot));
}

WeylOperator WeylOperator::sigma(SignaturePtr sig) {
  if (!sig->has_shift_pair()) throw InputError("algebra has no shift pair");
  std::size_t slot = sig->sigma_slot();
  return slot_operator(std::move(sig), slot);
}

WeylOperator WeylOperator::dt(SignaturePtr sig) {
  if (!sig->has_shift_pair()) throw InputError("algebra has no shift pair");
  std::size_t slot = sig->dt_slot();
  return slot_operator(std::move(sig), slot);
}

WeylOperator WeylOperator::from_polynomial(SignaturePtr sig, const Polynomial& f) {
  if (f.nvars() != sig->n()) throw SignatureError("polynomial variable count does not match algebra");
  WeylOperator p(sig);
  for (const auto& [g, c] : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < f.nvars(); ++i) m.e[sig->x_slot(i)] = static_cast<uint16_t>(g[i]);
    p.add_term(m, c);
  }
  return p;
}

Rational WeylOperator::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void WeylOperator::add_term(const Monomial& m, const Rational& c) {
  if (wbf::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (wbf::is_zero(it->second)) terms_.erase(it);
  }
}

void require_same_signature(const WeylOperator& a, const WeylOperator& b) {
  if (a.signature() == b.signature()) return;
  if (!a.signature() || !b.signature() || !(a.sig() == b.sig())) {
    throw SignatureError("operators live in different algebras");
  }
}

WeylOperator WeylOperator::operator+(const WeylOperator& o) const {
  require_same_signature(*this, o);
  WeylOperator r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

WeylOperator WeylOperator::operator-(const WeylOperator& o) const {
  require_same_signature(*this, o);
  WeylOperator r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

WeylOperator WeylOperator::operator*(const WeylOperator& o) const { return weyl_mul(*this, o); }

WeylOperator WeylOperator::scaled(const Rational& c) const {
  WeylOperator r(sig_);
  if (wbf::is_zero(c)) return r;
  r.terms_ = terms_;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

WeylOperator WeylOperator::pow(unsigned k) const {
  WeylOperator r = constant(sig_, 1);
  for (unsigned i = 0; i < k; ++i) r = weyl_mul(r, *this);
  return r;
}

bool WeylOperator::operator==(const WeylOperator& o) const {
  if (sig_ != o.sig_ && !(sig_ && o.sig_ && *sig_ == *o.sig_)) return false;
  return terms_ == o.terms_;
}

unsigned WeylOperator::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(sig_->slots()));
  return d;
}

WeylOperator WeylOperator::rebased(SignaturePtr sig, const std::vector<int>& slot_map) const {
  WeylOperator r(sig);
  for (const auto& [m, c] : terms_) {
    Monomial nm;
    nm.comp = m.comp;
    for (std::size_t s = 0; s < sig_->slots(); ++s) {
      if (m.e[s] == 0) continue;
      if (slot_map[s] < 0) throw SignatureError("operator uses a variable absent from target algebra");
      nm.e[static_cast<std::size_t>(slot_map[s])] = m.e[s];
    }
    r.add_term(nm, c);
  }
  return r;
}

WeylOperator weyl_mul(const WeylOperator& p, const WeylOperator& q) {
  require_same_signature(p, q);
  WeylOperator r(p.signature());
  std::vector<std::pair<Monomial, Integer>> buf;
  for (const auto& [ma, ca] : p.terms()) {
    for (const auto& [mb, cb] : q.terms()) {
      buf.clear();
      multiply_monomials(p.sig(), ma, mb, buf);
      Rational c = ca * cb;
      for (const auto& [m, k] : buf) r.add_term(m, c * k);
    }
  }
  return r;
}

// ------------------------------------------------------- rewriting reference

namespace {

using TermList = std::map<Monomial, Rational>;

void accumulate(TermList& into, const Monomial& m, const Rational& c) {
  auto [it, inserted] = into.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (wbf::is_zero(it->second)) into.erase(it);
  }
}

// gen · m for a single generator slot, using only elementary swaps.
TermList left_mul_generator(const AlgebraSignature& sig, std::size_t slot, const Monomial& m) {
  TermList out;
  if (slot < sig.alpha_size()) {
    Monomial r = m;
    bump(r, slot, 1);
    out.emplace(r, 1);
    return out;
  }
  if (sig.has_shift_pair() && slot == sig.dt_slot()) {
    if (m.e[sig.sigma_slot()] == 0) {
      Monomial r = m;
      bump(r, slot, 1);
      out.emplace(r, 1);
      return out;
    }
    // ∂_t σ = σ ∂_t − ∂_t
    Monomial rest = m;
    bump(rest, sig.sigma_slot(), -1);
    TermList inner = left_mul_generator(sig, slot, rest);
    for (const auto& [mm, c] : inner) {
      Monomial with_sigma = mm;
      bump(with_sigma, sig.sigma_slot(), 1);
      accumulate(out, with_sigma, c);
      accumulate(out, mm, -c);
    }
    return out;
  }
  std::size_t i = slot - sig.alpha_size();
  std::size_t xs = sig.x_slot(i);
  if (m.e[xs] == 0) {
    Monomial r = m;
    bump(r, slot, 1);
    out.emplace(r, 1);
    return out;
  }
  // ∂_i x_i = x_i ∂_i + 1 (or + h²)
  Monomial rest = m;
  bump(rest, xs, -1);
  TermList inner = left_mul_generator(sig, slot, rest);
  for (const auto& [mm, c] : inner) {
    Monomial with_x = mm;
    bump(with_x, xs, 1);
    accumulate(out, with_x, c);
  }
  Monomial lower = rest;
  if (sig.homogenized()) bump(lower, static_cast<std::size_t>(sig.h_slot()), 2);
  accumulate(out, lower, 1);
  return out;
}

}  // namespace

WeylOperator weyl_mul_by_rewriting(const WeylOperator& p, const WeylOperator& q) {
  require_same_signature(p, q);
  const AlgebraSignature& sig = p.sig();
  WeylOperator result(p.signature());
  for (const auto& [ma, ca] : p.terms()) {
    // Word of generators for ma, left to right in normal order.
    std::vector<std::size_t> word;
    for (std::size_t s = 0; s < sig.slots(); ++s) {
      for (unsigned k = 0; k < ma.e[s]; ++k) word.push_back(s);
    }
    TermList cur(q.terms().begin(), q.terms().end());
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      TermList next;
      for (const auto& [m, c] : cur) {
        for (const auto& [mm, cc] : left_mul_generator(sig, *it, m)) accumulate(next, mm, c * cc);
      }
      cur = std::move(next);
    }
    for (const auto& [m, c] : cur) result.add_term(m, c * ca);
  }
  return result;
}

// ------------------------------------------------------------------- action

namespace {

void require_function_action(const WeylOperator& p, std::size_t nvars) {
  const AlgebraSignature& sig = p.sig();
  if (nvars != sig.n()) throw SignatureError("function variable count does not match algebra");
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t s = sig.n(); s < sig.alpha_size(); ++s) {
      if (m.e[s] != 0) throw SignatureError("action of parameters or shift variables is undefined");
    }
    if (sig.has_shift_pair() && m.e[sig.dt_slot()] != 0) {
      throw SignatureError("action of the shift pair is undefined");
    }
    if (m.comp != 0) throw SignatureError("module elements do not act on functions");
  }
}

MultiIndex x_part(const AlgebraSignature& sig, const Monomial& m) {
  MultiIndex a(sig.n());
  for (std::size_t i = 0; i < sig.n(); ++i) a.set(i, m.e[sig.x_slot(i)]);
  return a;
}

MultiIndex d_part(const AlgebraSignature& sig, const Monomial& m) {
  MultiIndex b(sig.n());
  for (std::size_t i = 0; i < sig.n(); ++i) b.set(i, m.e[sig.d_slot(i)]);
  return b;
}

}  // namespace

Polynomial apply_to_poly(const WeylOperator& p, const Polynomial& f) {
  require_function_action(p, f.nvars());
  const AlgebraSignature& sig = p.sig();
  Polynomial r(f.nvars());
  std::map<MultiIndex, Polynomial> derivs;
  for (const auto& [m, c] : p.terms()) {
    MultiIndex b = d_part(sig, m);
    auto it = derivs.find(b);
    if (it == derivs.end()) it = derivs.emplace(b, partial_derive(f, b)).first;
    r = r + Polynomial::monomial(x_part(sig, m), c) * it->second;
  }
  return r;
}

Polynomial apply_numerator(const WeylOperator& p, const Polynomial& num, const Polynomial& den) {
  require_function_action(p, num.nvars());
  require_same_nvars(num, den);
  const AlgebraSignature& sig = p.sig();
  const std::size_t n = sig.n();

  // ∂^β (num/den) = N_β / den^{|β|+1}
  std::map<MultiIndex, Polynomial> cache;
  cache.emplace(MultiIndex(n), num);
  std::vector<Polynomial> dden;
  for (std::size_t i = 0; i < n; ++i) dden.push_back(den.derivative(i));

  auto numerator_for = [&](const MultiIndex& beta, auto&& self) -> const Polynomial& {
    auto it = cache.find(beta);
    if (it != cache.end()) return it->second;
    std::size_t i = 0;
    while (beta[i] == 0) ++i;
    MultiIndex prev = beta - MultiIndex::unit(n, i);
    const Polynomial& m = self(prev, self);
    Rational k = prev.total() + 1;
    Polynomial nb = m.derivative(i) * den - (m * dden[i]).scaled(k);
    return cache.emplace(beta, std::move(nb)).first->second;
  };

  unsigned top = 0;
  for (const auto& [m, c] : p.terms()) top = std::max(top, d_part(sig, m).total());
  std::vector<Polynomial> den_pow{Polynomial::constant(n, 1)};
  for (unsigned k = 1; k <= top; ++k) den_pow.push_back(den_pow.back() * den);

  Polynomial total(n);
  for (const auto& [m, c] : p.terms()) {
    MultiIndex b = d_part(sig, m);
    const Polynomial& nb = numerator_for(b, numerator_for);
    total = total + Polynomial::monomial(x_part(sig, m), c) * nb * den_pow[top - b.total()];
  }
  return total;
}

RationalFunction apply_to_ratfun(const WeylOperator& p, const RationalFunction& g) {
  Polynomial numer = apply_numerator(p, g.numerator(), g.denominator());
  unsigned top = 0;
  for (const auto& [m, c] : p.terms()) top = std::max(top, d_part(p.sig(), m).total());
  return ratfun_reduce(numer, g.denominator().pow(top + 1));
}

// -------------------------------------------------- partition-sum formula

namespace {

void enumerate_partitions(const MultiIndex& remaining, const MultiIndex& max_part,
                          std::vector<MultiIndex>& parts,
                          const std::function<void(const std::vector<MultiIndex>&)>& emit) {
  if (remaining.is_zero()) {
    emit(parts);
    return;
  }
  const std::size_t n = remaining.size();
  MultiIndex p(n);
  // Iterate all p ≤ remaining componentwise.
  while (true) {
    std::size_t i = 0;
    while (i < n && p[i] == remaining[i]) p.set(i++, 0);
    if (i == n) break;
    p.set(i, p[i] + 1);
    if (p <= max_part) {
      parts.push_back(p);
      enumerate_partitions(remaining - p, p, parts, emit);
      parts.pop_back();
    }
  }
}

}  // namespace

RationalFunction inverse_derivative_formula(const Polynomial& f, const MultiIndex& beta) {
  if (f.is_zero()) throw InputError("1/f with f = 0");
  if (beta.size() != f.nvars()) throw InputError("derivative multi-index has wrong length");
  const std::size_t n = f.nvars();
  const unsigned b = beta.total();
  if (b == 0) return ratfun_reduce(Polynomial::constant(n, 1), f);

  std::map<MultiIndex, Polynomial> derivs;
  auto deriv = [&](const MultiIndex& m) -> const Polynomial& {
    auto it = derivs.find(m);
    if (it == derivs.end()) it = derivs.emplace(m, partial_derive(f, m)).first;
    return it->second;
  };
  std::vector<Polynomial> fpow{Polynomial::constant(n, 1)};
  for (unsigned k = 1; k <= b; ++k) fpow.push_back(fpow.back() * f);

  Polynomial numer(n);
  std::vector<MultiIndex> parts;
  enumerate_partitions(beta, beta, parts, [&](const std::vector<MultiIndex>& ps) {
    const unsigned r = static_cast<unsigned>(ps.size());
    Integer seq_fact = 1;
    for (std::size_t i = 0; i < ps.size();) {
      std::size_t j = i;
      while (j < ps.size() && ps[j] == ps[i]) ++j;
      seq_fact *= factorial(static_cast<unsigned>(j - i));
      i = j;
    }
    Integer parts_fact = 1;
    for (const auto& q : ps) parts_fact *= q.factorial();
    Rational coef(factorial(r) * beta.factorial(), seq_fact * parts_fact);
    coef.canonicalize();
    if (r % 2 == 1) coef = -coef;
    Polynomial prod = fpow[b - r];
    for (const auto& q : ps) prod = prod * deriv(q);
    numer = numer + prod.scaled(coef);
  });
  return ratfun_reduce(numer, fpow[b] * f);
}

// ----------------------------------------------------------------- θ-map

WeylOperator theta_to_weyl(const ThetaPolynomial& p, SignaturePtr sig) {
  if (p.nvars() != sig->n()) throw SignatureError("θ-polynomial variable count does not match algebra");
  // (x∂)^m = Σ_k S(m,k) x^k ∂^k with Stirling numbers of the second kind.
  auto stirling = [](unsigned m) {
    std::vector<std::vector<Integer>> s(m + 1, std::vector<Integer>(m + 1, 0));
    s[0][0] = 1;
    for (unsigned i = 1; i <= m; ++i) {
      for (unsigned k = 1; k <= i; ++k) s[i][k] = s[i - 1][k - 1] + Integer(k) * s[i - 1][k];
    }
    return s[m];
  };
  WeylOperator result(sig);
  for (const auto& [g, c] : p.terms()) {
    WeylOperator term = WeylOperator::constant(sig, c);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == 0) continue;
      auto row = stirling(g[i]);
      WeylOperator factor(sig);
      for (unsigned k = 1; k <= g[i]; ++k) {
        Monomial m;
        m.e[sig->x_slot(i)] = static_cast<uint16_t>(k);
        m.e[sig->d_slot(i)] = static_cast<uint16_t>(k);
        factor.add_term(m, Rational(row[k]));
      }
      term = weyl_mul(term, factor);
    }
    result = result + term;
  }
  return result;
}

// ----------------------------------------------------------------- printing

std::string to_string(const WeylOperator& p) {
  if (p.is_zero()) return "0";
  const AlgebraSignature& sig = p.sig();
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    if (a.first.comp != b.first.comp) return a.first.comp < b.first.comp;
    unsigned da = a.first.degree(sig.slots());
    unsigned db = b.first.degree(sig.slots());
    if (da != db) return da > db;
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
    if (mag != 1 || m.is_one()) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t s = 0; s < sig.slots(); ++s) {
      if (m.e[s] == 0) continue;
      if (wrote) os << "*";
      os << sig.slot_name(s);
      if (m.e[s] > 1) os << "^" << m.e[s];
      wrote = true;
    }
    if (m.comp != 0) os << "*e" << int(m.comp);
  }
  return os.str();
}

}  // namespace wbf
