#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "wbf/ann.hpp"
#include "wbf/bfun.hpp"
#include "wbf/groebner.hpp"
#include "wbf/newton.hpp"
#include "wbf/parse.hpp"

namespace wbf::test {

inline SignaturePtr d2() { return AlgebraSignature::weyl(2); }

inline WeylOperator op(const std::string& text, std::size_t n = 2) {
  return parse_operator(text, AlgebraSignature::weyl(n));
}

inline IdealPresentation ideal(std::size_t n, const std::vector<std::string>& gens) {
  auto sig = AlgebraSignature::weyl(n);
  std::vector<WeylOperator> ops;
  for (const auto& g : gens) ops.push_back(parse_operator(g, sig));
  return IdealPresentation(sig, ops);
}

inline Polynomial poly(const std::string& text) { return parse_polynomial(text); }
inline Polynomial poly2(const std::string& text) { return parse_polynomial(text, {"x", "y"}); }

inline BFunction roots(const std::vector<Rational>& rs) { return BFunction::from_roots(rs); }

inline Rational R(long a, long b = 1) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

inline const std::vector<std::vector<Rational>>& compass() {
  static const std::vector<std::vector<Rational>> w = {{1, 0},  {1, 1},   {0, 1},  {-1, 1},
                                                       {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  return w;
}

// Seeded generator of small random algebraic objects.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational coeff() {
    long num = integer(-5, 5);
    while (num == 0) num = integer(-5, 5);
    Rational c(num, integer(1, 3));
    c.canonicalize();
    return c;
  }

  MultiIndex exponent(std::size_t n, unsigned max_total) {
    MultiIndex m(n);
    unsigned left = max_total;
    for (std::size_t i = 0; i < n; ++i) {
      unsigned e = static_cast<unsigned>(integer(0, left));
      m.set(i, e);
      left -= e;
    }
    return m;
  }

  Polynomial polynomial(std::size_t n, std::size_t max_terms, unsigned max_degree) {
    Polynomial p(n);
    std::size_t k = static_cast<std::size_t>(integer(1, static_cast<long>(max_terms)));
    for (std::size_t i = 0; i < k; ++i) p.add_term(exponent(n, max_degree), coeff());
    if (p.is_zero()) p.add_term(MultiIndex(n), 1);
    return p;
  }

  // Random operator over sig touching only x and ∂ slots.
  WeylOperator weyl(const SignaturePtr& sig, std::size_t max_terms, unsigned max_degree) {
    WeylOperator p(sig);
    std::size_t k = static_cast<std::size_t>(integer(1, static_cast<long>(max_terms)));
    for (std::size_t t = 0; t < k; ++t) {
      Monomial m;
      unsigned left = static_cast<unsigned>(integer(0, max_degree));
      for (std::size_t i = 0; i < sig->n() && left > 0; ++i) {
        unsigned a = static_cast<unsigned>(integer(0, left));
        m.e[sig->x_slot(i)] = static_cast<uint16_t>(a);
        left -= a;
        unsigned b = static_cast<unsigned>(integer(0, left));
        m.e[sig->d_slot(i)] = static_cast<uint16_t>(b);
        left -= b;
      }
      p.add_term(m, coeff());
    }
    return p;
  }

  // Random operator over an arbitrary signature (params, σ, ∂_t included).
  WeylOperator any_slots(const SignaturePtr& sig, std::size_t max_terms, unsigned max_degree) {
    WeylOperator p(sig);
    std::size_t k = static_cast<std::size_t>(integer(1, static_cast<long>(max_terms)));
    for (std::size_t t = 0; t < k; ++t) {
      Monomial m;
      unsigned left = static_cast<unsigned>(integer(0, max_degree));
      for (std::size_t s = 0; s < sig->slots() && left > 0; ++s) {
        unsigned a = static_cast<unsigned>(integer(0, left));
        m.e[s] = static_cast<uint16_t>(a);
        left -= a;
      }
      p.add_term(m, coeff());
    }
    return p;
  }

  std::vector<Rational> weight(std::size_t n, long bound = 3) {
    std::vector<Rational> w(n);
    do {
      for (auto& x : w) x = integer(-bound, bound);
    } while (std::all_of(w.begin(), w.end(), [](const Rational& x) { return sgn(x) == 0; }));
    return w;
  }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(integer(0, static_cast<long>(v.size()) - 1))];
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace wbf::test
