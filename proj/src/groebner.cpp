#include "wbf/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "wbf/errors.hpp"

namespace wbf {

Budget Budget::from_env() {
  Budget b;
  auto read = [](const char* name, auto fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return fallback;
    char* end = nullptr;
    long long x = std::strtoll(v, &end, 10);
    if (*end != '\0' || x <= 0) throw InputError(std::string(name) + " must be a positive integer");
    return static_cast<decltype(fallback)>(x);
  };
  b.max_pairs = read("WBF_BUDGET_PAIRS", b.max_pairs);
  b.max_degree = read("WBF_BUDGET_DEGREE", b.max_degree);
  return b;
}

IdealPresentation::IdealPresentation(SignaturePtr sig, std::vector<WeylOperator> gens)
    : sig_(std::move(sig)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!(g.sig() == *sig_)) throw SignatureError("generator lives in a different algebra");
    gens_.push_back(std::move(g));
  }
  if (gens_.empty()) throw InputError("ideal needs at least one nonzero generator");
}

bool GroebnerBasis::is_unit() const {
  for (const auto& g : elements) {
    auto lm = leading_term(g, order).first;
    if (lm.is_one() && lm.comp == 0) return true;
  }
  return false;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : elements) out.push_back(leading_term(g, order).first);
  return out;
}

namespace {

struct Term {
  Monomial m;
  Integer c;
};
using IPoly = std::vector<Term>;  // strictly decreasing monomials

class Engine {
 public:
  Engine(const AlgebraSignature& sig, const TermOrder& order)
      : sig_(sig), ord_(order), slots_(sig.slots()) {}

  const TermOrder& order() const { return ord_; }
  std::size_t slots() const { return slots_; }

  // Integer primitive form of p; scale receives the factor with result = scale·p.
  IPoly from_op(const WeylOperator& p, Rational* scale = nullptr) const {
    Integer l = 1;
    for (const auto& [m, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    IPoly r;
    r.reserve(p.size());
    for (const auto& [m, c] : p.terms()) r.push_back({m, c.get_num() * (l / c.get_den())});
    sort_desc(r);
    Rational s = l;
    Integer g = content(r);
    if (g != 0 && g != 1) {
      for (auto& t : r) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
      s /= g;
    }
    if (scale) *scale = s;
    return r;
  }

  WeylOperator to_op(const IPoly& p, const SignaturePtr& sig, const Rational& divisor) const {
    WeylOperator r(sig);
    for (const auto& t : p) r.add_term(t.m, Rational(t.c) / divisor);
    return r;
  }

  WeylOperator to_monic_op(const IPoly& p, const SignaturePtr& sig) const {
    return to_op(p, sig, p.empty() ? Rational(1) : Rational(p.front().c));
  }

  void sort_desc(IPoly& p) const {
    std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return ord_.compare(a.m, b.m) > 0; });
  }

  static Integer content(const IPoly& p) {
    Integer g = 0;
    for (const auto& t : p) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  // Divides by the content and makes the leading coefficient positive.
  void make_primitive(IPoly& p) const {
    if (p.empty()) return;
    Integer g = content(p);
    if (sgn(p.front().c) < 0) g = -g;
    if (g != 1) {
      for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    }
  }

  // q·g with q a monomial (coefficient 1); sorted.
  IPoly mul_mono(const Monomial& q, const IPoly& g) const {
    bool plain = true;
    for (std::size_t i = 0; i < sig_.n() && plain; ++i) {
      if (q.e[sig_.d_slot(i)] != 0) plain = false;
    }
    if (sig_.has_shift_pair() && q.e[sig_.dt_slot()] != 0) plain = false;
    IPoly r;
    r.reserve(g.size());
    if (plain) {
      // Pure α-block monomials commute with everything; the order is multiplicative.
      for (const auto& t : g) {
        Term nt{t.m, t.c};
        for (std::size_t s = 0; s < slots_; ++s) nt.m.e[s] = static_cast<uint16_t>(nt.m.e[s] + q.e[s]);
        r.push_back(std::move(nt));
      }
      return r;
    }
    buf_.clear();
    for (const auto& t : g) {
      std::size_t start = buf_.size();
      multiply_monomials(sig_, q, t.m, buf_);
      for (std::size_t k = start; k < buf_.size(); ++k) buf_[k].second *= t.c;
    }
    for (auto& [m, c] : buf_) r.push_back({m, std::move(c)});
    sort_desc(r);
    IPoly merged;
    merged.reserve(r.size());
    for (auto& t : r) {
      if (!merged.empty() && merged.back().m == t.m) {
        merged.back().c += t.c;
        if (sgn(merged.back().c) == 0) merged.pop_back();
      } else {
        merged.push_back(std::move(t));
      }
    }
    return merged;
  }

  // a·p[ps..] − b·r[rs..]
  IPoly combine(const Integer& a, const IPoly& p, std::size_t ps, const Integer& b, const IPoly& r,
                std::size_t rs) const {
    IPoly out;
    out.reserve(p.size() - ps + r.size() - rs);
    std::size_t i = ps;
    std::size_t j = rs;
    while (i < p.size() || j < r.size()) {
      int c;
      if (i == p.size()) c = -1;
      else if (j == r.size()) c = 1;
      else c = ord_.compare(p[i].m, r[j].m);
      if (c > 0) {
        out.push_back({p[i].m, a * p[i].c});
        ++i;
      } else if (c < 0) {
        out.push_back({r[j].m, -(b * r[j].c)});
        ++j;
      } else {
        Integer v = a * p[i].c - b * r[j].c;
        if (sgn(v) != 0) out.push_back({p[i].m, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  // Reduces p by basis (entries with index in use). With full=false stops at
  // the first irreducible leading term. multiplier tracks M with M·p_in ≡ result.
  IPoly reduce(IPoly p, const std::vector<const IPoly*>& basis, bool full, Rational* multiplier = nullptr) const {
    IPoly result;
    std::size_t head = 0;
    unsigned steps = 0;
    while (head < p.size()) {
      const IPoly* red = nullptr;
      for (const IPoly* g : basis) {
        if (mono_divides(g->front().m, p[head].m, slots_)) {
          red = g;
          break;
        }
      }
      if (red == nullptr) {
        if (!full) break;
        result.push_back(std::move(p[head]));
        ++head;
        continue;
      }
      Monomial q = mono_quotient(p[head].m, red->front().m, slots_);
      q.comp = 0;
      Integer g;
      mpz_gcd(g.get_mpz_t(), p[head].c.get_mpz_t(), red->front().c.get_mpz_t());
      Integer a = red->front().c / g;
      Integer b = p[head].c / g;
      if (sgn(a) < 0) {
        a = -a;
        b = -b;
      }
      IPoly qg = mul_mono(q, *red);
      p = combine(a, p, head + 1, b, qg, 1);
      head = 0;
      if (a != 1) {
        for (auto& t : result) t.c *= a;
        if (multiplier) *multiplier *= a;
      }
      if (++steps % 8 == 0) {
        Integer c = content(p);
        for (const auto& t : result) {
          if (c == 1) break;
          mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
        }
        if (c != 0 && c != 1) {
          for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
          for (auto& t : result) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
          if (multiplier) *multiplier /= c;
        }
      }
    }
    for (std::size_t k = head; k < p.size(); ++k) result.push_back(std::move(p[k]));
    return result;
  }

  IPoly spoly(const IPoly& f, const IPoly& g, const Monomial& lcm) const {
    Monomial qf = mono_quotient(lcm, f.front().m, slots_);
    Monomial qg = mono_quotient(lcm, g.front().m, slots_);
    qf.comp = 0;
    qg.comp = 0;
    Integer d;
    mpz_gcd(d.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
    Integer a = g.front().c / d;
    Integer b = f.front().c / d;
    IPoly ff = mul_mono(qf, f);
    IPoly gg = mul_mono(qg, g);
    return combine(a, ff, 1, b, gg, 1);
  }

  unsigned degree(const IPoly& p) const {
    unsigned d = 0;
    for (const auto& t : p) d = std::max(d, t.m.degree(slots_));
    return d;
  }

 private:
  const AlgebraSignature& sig_;
  const TermOrder& ord_;
  std::size_t slots_;
  mutable std::vector<std::pair<Monomial, Integer>> buf_;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  unsigned sugar;
};

class Buchberger {
 public:
  Buchberger(const Engine& eng, const Budget& budget) : eng_(eng), budget_(budget) {}

  void add_input(IPoly p) {
    p = eng_.reduce(std::move(p), active_basis(), true);
    eng_.make_primitive(p);
    if (p.empty()) return;
    unsigned s = eng_.degree(p);
    insert(std::move(p), s);
  }

  void run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const Pair& a = pairs_[k];
        const Pair& b = pairs_[best];
        if (a.sugar != b.sugar) {
          if (a.sugar < b.sugar) best = k;
          continue;
        }
        int c = eng_.order().compare(a.lcm, b.lcm);
        if (c < 0 || (c == 0 && std::make_pair(a.j, a.i) < std::make_pair(b.j, b.i))) best = k;
      }
      Pair pr = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<long>(best));
      if (++stats_.pairs_reduced > budget_.max_pairs) {
        throw ResourceCapError("Gröbner basis computation exceeded the pair budget (" +
                               std::to_string(budget_.max_pairs) + ")");
      }
      IPoly s = eng_.spoly(polys_[pr.i], polys_[pr.j], pr.lcm);
      s = eng_.reduce(std::move(s), active_basis(), true);
      if (s.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      eng_.make_primitive(s);
      unsigned d = eng_.degree(s);
      if (d > budget_.max_degree) {
        throw ResourceCapError("Gröbner basis computation exceeded the degree budget (" +
                               std::to_string(budget_.max_degree) + ")");
      }
      insert(std::move(s), std::max(pr.sugar, d));
    }
  }

  // Minimal, interreduced basis.
  std::vector<IPoly> reduced_basis() const {
    const std::size_t slots = eng_.slots();
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < polys_.size() && !redundant; ++j) {
        if (i == j) continue;
        const Monomial& li = polys_[i].front().m;
        const Monomial& lj = polys_[j].front().m;
        if (mono_divides(lj, li, slots) && (!(li == lj) || j < i)) redundant = true;
      }
      if (!redundant) keep.push_back(i);
    }
    std::vector<IPoly> out;
    for (std::size_t i : keep) {
      std::vector<const IPoly*> others;
      for (std::size_t j : keep) {
        if (j != i) others.push_back(&polys_[j]);
      }
      IPoly r = eng_.reduce(polys_[i], others, true);
      eng_.make_primitive(r);
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [&](const IPoly& a, const IPoly& b) {
      return eng_.order().compare(a.front().m, b.front().m) < 0;
    });
    return out;
  }

  const GroebnerStats& stats() const { return stats_; }

 private:
  std::vector<const IPoly*> active_basis() const {
    std::vector<const IPoly*> b;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (active_[i]) b.push_back(&polys_[i]);
    }
    return b;
  }

  // Gebauer–Möller update with the chain criterion only.
  void insert(IPoly h, unsigned sugar) {
    const std::size_t slots = eng_.slots();
    const std::size_t k = polys_.size();
    const Monomial lh = h.front().m;

    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < k; ++i) {
      if (!active_[i]) continue;
      const Monomial& li = polys_[i].front().m;
      if (li.comp != lh.comp) continue;
      Monomial l = mono_lcm(li, lh, slots);
      unsigned d = l.degree(slots);
      unsigned s = std::max(sugars_[i] + d - li.degree(slots), sugar + d - lh.degree(slots));
      fresh.push_back({i, k, l, s});
    }
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool drop = false;
      for (std::size_t b = 0; b < fresh.size() && !drop; ++b) {
        if (a == b) continue;
        if (mono_divides(fresh[b].lcm, fresh[a].lcm, slots)) {
          if (!(fresh[b].lcm == fresh[a].lcm) || b < a) drop = true;
        }
      }
      if (drop) ++stats_.pairs_skipped;
      else kept.push_back(fresh[a]);
    }
    std::vector<Pair> old;
    for (const Pair& p : pairs_) {
      if (mono_divides(lh, p.lcm, slots)) {
        Monomial li = mono_lcm(polys_[p.i].front().m, lh, slots);
        Monomial lj = mono_lcm(polys_[p.j].front().m, lh, slots);
        if (!(li == p.lcm) && !(lj == p.lcm)) {
          ++stats_.pairs_skipped;
          continue;
        }
      }
      old.push_back(p);
    }
    pairs_ = std::move(old);
    for (auto& p : kept) pairs_.push_back(p);

    for (std::size_t i = 0; i < k; ++i) {
      if (active_[i] && mono_divides(lh, polys_[i].front().m, slots)) active_[i] = false;
    }
    polys_.push_back(std::move(h));
    sugars_.push_back(sugar);
    active_.push_back(true);
  }

  const Engine& eng_;
  Budget budget_;
  std::vector<IPoly> polys_;
  std::vector<unsigned> sugars_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  GroebnerStats stats_;
};

}  // namespace

GroebnerBasis buchberger(const IdealPresentation& ideal, const TermOrder& order, const Budget& budget) {
  const AlgebraSignature& sig = ideal.sig();
  if (order.slots() != sig.slots()) throw InputError("term order does not match the algebra");
  if (!order.is_admissible()) {
    throw InputError("term order is not admissible (homogenize first for negative weights)");
  }
  Engine eng(sig, order);
  std::vector<IPoly> inputs;
  for (const auto& g : ideal.generators()) inputs.push_back(eng.from_op(g));
  std::sort(inputs.begin(), inputs.end(), [&](const IPoly& a, const IPoly& b) {
    return order.compare(a.front().m, b.front().m) < 0;
  });
  Buchberger bb(eng, budget);
  for (auto& p : inputs) bb.add_input(std::move(p));
  bb.run();

  GroebnerBasis gb;
  gb.signature = ideal.signature();
  gb.order = order;
  gb.reduced = true;
  gb.stats = bb.stats();
  for (const auto& p : bb.reduced_basis()) gb.elements.push_back(eng.to_monic_op(p, ideal.signature()));
  return gb;
}

WeylOperator normal_form(const WeylOperator& p, const GroebnerBasis& g) {
  if (p.is_zero()) return p;
  require_same_signature(p, g.elements.empty() ? p : g.elements.front());
  Engine eng(p.sig(), g.order);
  std::vector<IPoly> basis;
  for (const auto& e : g.elements) basis.push_back(eng.from_op(e));
  std::vector<const IPoly*> ptrs;
  for (const auto& b : basis) ptrs.push_back(&b);
  Rational scale;
  IPoly ip = eng.from_op(p, &scale);
  Rational mult = scale;
  IPoly r = eng.reduce(std::move(ip), ptrs, true, &mult);
  return eng.to_op(r, p.signature(), mult);
}

bool in_ideal(const WeylOperator& p, const GroebnerBasis& g) { return normal_form(p, g).is_zero(); }

bool is_groebner(const std::vector<WeylOperator>& elements, const TermOrder& order) {
  std::vector<WeylOperator> nz;
  for (const auto& e : elements) {
    if (!e.is_zero()) nz.push_back(e);
  }
  if (nz.empty()) return true;
  Engine eng(nz.front().sig(), order);
  std::vector<IPoly> polys;
  for (const auto& e : nz) polys.push_back(eng.from_op(e));
  std::vector<const IPoly*> ptrs;
  for (const auto& p : polys) ptrs.push_back(&p);
  const std::size_t slots = eng.slots();
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      const Monomial& li = polys[i].front().m;
      const Monomial& lj = polys[j].front().m;
      if (li.comp != lj.comp) continue;
      IPoly s = eng.spoly(polys[i], polys[j], mono_lcm(li, lj, slots));
      if (!eng.reduce(std::move(s), ptrs, false).empty()) return false;
    }
  }
  return true;
}

InitialIdeal initial_ideal(const IdealPresentation& ideal, const std::vector<Rational>& omega,
                           const Budget& budget) {
  const AlgebraSignature& sig = ideal.sig();
  if (omega.size() != sig.n()) throw InputError("weight length does not match the number of variables");
  if (std::all_of(omega.begin(), omega.end(), [](const Rational& w) { return sgn(w) == 0; })) {
    throw InputError("weight vector must be nonzero");
  }
  if (sig.homogenized() || sig.has_shift_pair()) {
    throw InputError("initial ideals are computed in plain Weyl algebras (with optional parameters)");
  }
  SignaturePtr hsig = homogenized_signature(sig);
  std::vector<WeylOperator> hgens;
  for (const auto& g : ideal.generators()) hgens.push_back(homogenize(g, hsig));
  GroebnerBasis hgb = buchberger(IdealPresentation(hsig, hgens),
                                 TermOrder::homogenized_weight(*hsig, omega), budget);
  WeightSpec w = WeightSpec::from_omega(omega);
  std::vector<WeylOperator> in_gens;
  for (const auto& g : hgb.elements) in_gens.push_back(initial_form(dehomogenize(g, ideal.signature()), w));

  InitialIdeal out;
  out.basis = buchberger(IdealPresentation(ideal.signature(), in_gens), TermOrder::grlex(sig), budget);
  out.basis.stats.pairs_reduced += hgb.stats.pairs_reduced;
  out.ideal = IdealPresentation(ideal.signature(), out.basis.elements);
  out.unit_ideal = out.basis.is_unit();
  return out;
}

IdealPresentation eliminate(const IdealPresentation& ideal, const std::vector<std::size_t>& block,
                            const Budget& budget) {
  if (block.empty()) return ideal;
  GroebnerBasis gb = buchberger(ideal, TermOrder::elimination(ideal.sig(), block), budget);
  std::vector<WeylOperator> kept;
  for (const auto& g : gb.elements) {
    bool free = true;
    for (const auto& [m, c] : g.terms()) {
      for (std::size_t s : block) {
        if (m.e[s] != 0) free = false;
      }
    }
    if (free) kept.push_back(g);
  }
  if (kept.empty()) kept.push_back(WeylOperator(ideal.signature()));
  std::vector<WeylOperator> nz;
  for (auto& k : kept) {
    if (!k.is_zero()) nz.push_back(k);
  }
  if (nz.empty()) throw Error("elimination ideal is zero");
  return IdealPresentation(ideal.signature(), nz);
}

IdealPresentation ideal_quotient(const IdealPresentation& j, const WeylOperator& g, const Budget& budget) {
  require_same_signature(j.generators().front(), g);
  const SignaturePtr& sig = j.signature();
  std::vector<WeylOperator> gens;
  // (g, 1) and (j_k, 0) in D^2; component 0 is eliminated by position-over-term.
  WeylOperator first = g;
  Monomial unit;
  unit.comp = 1;
  first.add_term(unit, 1);
  gens.push_back(first);
  for (const auto& jk : j.generators()) gens.push_back(jk);
  GroebnerBasis gb = buchberger(IdealPresentation(sig, gens), TermOrder::grlex(*sig), budget);
  std::vector<WeylOperator> out;
  for (const auto& e : gb.elements) {
    if (leading_term(e, gb.order).first.comp != 1) continue;
    WeylOperator a(sig);
    for (const auto& [m, c] : e.terms()) {
      Monomial mm = m;
      mm.comp = 0;
      a.add_term(mm, c);
    }
    out.push_back(a);
  }
  if (out.empty()) throw Error("ideal quotient is zero");
  return IdealPresentation(sig, out);
}

bool contains_all(const GroebnerBasis& g, const IdealPresentation& a) {
  for (const auto& p : a.generators()) {
    if (!in_ideal(p, g)) return false;
  }
  return true;
}

bool same_ideal(const IdealPresentation& a, const IdealPresentation& b, const Budget& budget) {
  GroebnerBasis ga = buchberger(a, TermOrder::grlex(a.sig()), budget);
  GroebnerBasis gb = buchberger(b, TermOrder::grlex(b.sig()), budget);
  return contains_all(ga, b) && contains_all(gb, a);
}

}  // namespace wbf
