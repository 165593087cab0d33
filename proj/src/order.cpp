#include "wbf/order.hpp"

#include <numeric>

#include "wbf/errors.hpp"

namespace wbf {

WeightSpec::WeightSpec(std::vector<Rational> u_, std::vector<Rational> v_)
    : u(std::move(u_)), v(std::move(v_)) {
  if (u.size() != v.size()) throw InputError("weight halves have different lengths");
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (sgn(Rational(u[i] + v[i])) < 0) throw InputError("weight violates u_i + v_i >= 0");
  }
}

WeightSpec WeightSpec::from_omega(const std::vector<Rational>& omega) {
  std::vector<Rational> u;
  for (const auto& w : omega) u.push_back(-w);
  return WeightSpec(std::move(u), omega);
}

Rational term_weight(const AlgebraSignature& sig, const Monomial& m, const WeightSpec& w) {
  if (w.n() != sig.n()) throw InputError("weight length does not match the number of variables");
  Rational d = 0;
  for (std::size_t i = 0; i < sig.n(); ++i) {
    if (m.e[sig.x_slot(i)]) d += w.u[i] * m.e[sig.x_slot(i)];
    if (m.e[sig.d_slot(i)]) d += w.v[i] * m.e[sig.d_slot(i)];
  }
  return d;
}

Rational weighted_degree(const WeylOperator& p, const WeightSpec& w) {
  if (p.is_zero()) throw InputError("weighted degree of the zero operator");
  bool first = true;
  Rational best;
  for (const auto& [m, c] : p.terms()) {
    Rational d = term_weight(p.sig(), m, w);
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

WeylOperator initial_form(const WeylOperator& p, const WeightSpec& w) {
  Rational top = weighted_degree(p, w);
  WeylOperator r(p.signature());
  for (const auto& [m, c] : p.terms()) {
    if (term_weight(p.sig(), m, w) == top) r.add_term(m, c);
  }
  return r;
}

// --------------------------------------------------------------- TermOrder

TermOrder::TermOrder(std::size_t slots, std::vector<std::vector<Rational>> rows,
                     std::vector<std::size_t> lex)
    : slots_(slots), lex_(std::move(lex)) {
  for (const auto& row : rows) {
    if (row.size() != slots) throw InputError("order row has wrong length");
    Integer l = 1;
    for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<long long> irow;
    for (const auto& q : row) {
      Integer z = q.get_num() * (l / q.get_den());
      if (!z.fits_slong_p()) throw InputError("weight too large");
      irow.push_back(z.get_si());
    }
    rows_.push_back(std::move(irow));
  }
}

namespace {

std::vector<std::size_t> default_lex(const AlgebraSignature& sig) {
  std::vector<std::size_t> lex;
  for (std::size_t i = 0; i < sig.n(); ++i) lex.push_back(sig.d_slot(i));
  if (sig.has_shift_pair()) lex.push_back(sig.dt_slot());
  for (std::size_t s = 0; s < sig.alpha_size(); ++s) lex.push_back(s);
  return lex;
}

std::vector<Rational> ones(const AlgebraSignature& sig) {
  return std::vector<Rational>(sig.slots(), Rational(1));
}

}  // namespace

TermOrder TermOrder::grlex(const AlgebraSignature& sig) {
  return TermOrder(sig.slots(), {ones(sig)}, default_lex(sig));
}

TermOrder TermOrder::weighted(const AlgebraSignature& sig, const WeightSpec& w) {
  if (w.n() != sig.n()) throw InputError("weight length does not match the number of variables");
  std::vector<Rational> row(sig.slots(), Rational(0));
  for (std::size_t i = 0; i < sig.n(); ++i) {
    row[sig.x_slot(i)] = w.u[i];
    row[sig.d_slot(i)] = w.v[i];
  }
  return TermOrder(sig.slots(), {row, ones(sig)}, default_lex(sig));
}

TermOrder TermOrder::homogenized_weight(const AlgebraSignature& sig, const std::vector<Rational>& omega) {
  int h = sig.h_slot();
  if (!sig.homogenized() || h < 0) throw InputError("homogenized order needs a homogenized algebra");
  if (omega.size() != sig.n()) throw InputError("weight length does not match the number of variables");
  std::vector<Rational> w(sig.slots(), Rational(0));
  for (std::size_t i = 0; i < sig.n(); ++i) {
    w[sig.x_slot(i)] = -omega[i];
    w[sig.d_slot(i)] = omega[i];
  }
  std::vector<Rational> no_h = ones(sig);
  no_h[static_cast<std::size_t>(h)] = 0;
  return TermOrder(sig.slots(), {ones(sig), w, no_h}, default_lex(sig));
}

TermOrder TermOrder::elimination(const AlgebraSignature& sig, const std::vector<std::size_t>& block) {
  std::vector<Rational> row(sig.slots(), Rational(0));
  for (std::size_t s : block) row.at(s) = 1;
  return TermOrder(sig.slots(), {row, ones(sig)}, default_lex(sig));
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  for (const auto& row : rows_) {
    long long da = 0;
    long long db = 0;
    for (std::size_t s = 0; s < slots_; ++s) {
      da += row[s] * a.e[s];
      db += row[s] * b.e[s];
    }
    if (da != db) return da > db ? 1 : -1;
  }
  for (std::size_t s : lex_) {
    if (a.e[s] != b.e[s]) return a.e[s] > b.e[s] ? 1 : -1;
  }
  return 0;
}

bool TermOrder::is_admissible() const {
  for (std::size_t s = 0; s < slots_; ++s) {
    for (const auto& row : rows_) {
      if (row[s] > 0) break;
      if (row[s] < 0) return false;
    }
  }
  return true;
}

std::pair<Monomial, Rational> leading_term(const WeylOperator& p, const TermOrder& order) {
  if (p.is_zero()) throw Error("leading term of the zero operator");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it) {
    if (order.compare(it->first, best->first) > 0) best = it;
  }
  return {best->first, best->second};
}

// ---------------------------------------------------------- homogenization

namespace {

std::vector<int> slot_map_by_name(const AlgebraSignature& from, const AlgebraSignature& to) {
  std::vector<int> map(from.slots(), -1);
  for (std::size_t s = 0; s < from.slots(); ++s) {
    for (std::size_t t = 0; t < to.slots(); ++t) {
      if (from.slot_name(s) == to.slot_name(t)) map[s] = static_cast<int>(t);
    }
  }
  return map;
}

}  // namespace

SignaturePtr homogenized_signature(const AlgebraSignature& sig) {
  if (sig.homogenized()) throw InputError("algebra is already homogenized");
  auto params = sig.params();
  params.push_back("h");
  return make_signature(sig.xs(), params, sig.has_shift_pair(), true);
}

WeylOperator homogenize(const WeylOperator& p, const SignaturePtr& hsig) {
  const AlgebraSignature& hs = *hsig;
  if (!hs.homogenized()) throw InputError("target algebra is not homogenized");
  WeylOperator q = p.signature().get() == hsig.get() || p.sig() == hs
                       ? WeylOperator(p)
                       : p.rebased(hsig, slot_map_by_name(p.sig(), hs));
  if (q.is_zero()) return WeylOperator(hsig);
  auto h = static_cast<std::size_t>(hs.h_slot());
  unsigned top = 0;
  for (const auto& [m, c] : q.terms()) top = std::max(top, m.degree(hs.slots()));
  WeylOperator r(hsig);
  for (const auto& [m, c] : q.terms()) {
    Monomial mm = m;
    mm.e[h] = static_cast<uint16_t>(mm.e[h] + top - m.degree(hs.slots()));
    r.add_term(mm, c);
  }
  return r;
}

WeylOperator dehomogenize(const WeylOperator& p, const SignaturePtr& plain) {
  const AlgebraSignature& hs = p.sig();
  auto h = static_cast<std::size_t>(hs.h_slot());
  std::vector<int> map = slot_map_by_name(hs, *plain);
  WeylOperator r(plain);
  for (const auto& [m, c] : p.terms()) {
    Monomial nm;
    nm.comp = m.comp;
    for (std::size_t s = 0; s < hs.slots(); ++s) {
      if (s == h || m.e[s] == 0) continue;
      if (map[s] < 0) throw SignatureError("operator uses a variable absent from target algebra");
      nm.e[static_cast<std::size_t>(map[s])] = m.e[s];
    }
    r.add_term(nm, c);
  }
  return r;
}

}  // namespace wbf
