#include "wbf/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "wbf/errors.hpp"

namespace wbf {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::constant(const Rational& c) { return UPoly({c}); }
UPoly UPoly::s() { return UPoly({Rational(0), Rational(1)}); }
UPoly UPoly::linear_root(const Rational& r) { return UPoly({Rational(-r), Rational(1)}); }

UPoly UPoly::from_roots(const std::vector<Rational>& roots) {
  UPoly p = constant(1);
  for (const auto& r : roots) p = p * linear_root(r);
  return p;
}

Rational UPoly::lead() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational UPoly::eval(const Rational& x) const {
  Rational v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + o.scaled(-1); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly UPoly::scaled(const Rational& k) const {
  std::vector<Rational> r = c_;
  for (auto& x : r) x *= k;
  return UPoly(std::move(r));
}

UPoly UPoly::derivative() const {
  std::vector<Rational> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Rational(static_cast<long>(i)));
  return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / lead());
}

UPoly UPoly::substitute_affine(const Rational& a, const Rational& b) const {
  UPoly lin({b, a});
  UPoly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + constant(*it);
  return r;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error("division by the zero polynomial");
  std::vector<Rational> rem = a.coeffs();
  const auto& bc = b.coeffs();
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rational c = rem[static_cast<std::size_t>(k) + bc.size() - 1] / bc.back();
    q[static_cast<std::size_t>(k)] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= c * bc[j];
  }
  return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.is_zero()) throw InputError("squarefree part of the zero polynomial");
  if (p.degree() == 0) return UPoly::constant(1);
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

bool divides(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) throw InputError("divisibility by the zero polynomial");
  return divmod(b, a).second.is_zero();
}

namespace {

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> primes;
  std::vector<unsigned> exps;
  Integer m = n;
  for (Integer p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    primes.push_back(p);
    exps.push_back(e);
  }
  if (m > 1) {
    primes.push_back(m);
    exps.push_back(1);
  }
  std::vector<Integer> out{1};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    std::size_t sz = out.size();
    Integer pk = 1;
    for (unsigned e = 1; e <= exps[i]; ++e) {
      pk *= primes[i];
      for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
    }
  }
  return out;
}

}  // namespace

std::vector<std::pair<Rational, unsigned>> rational_roots(const UPoly& p) {
  if (p.is_zero()) throw InputError("roots of the zero polynomial");
  std::vector<std::pair<Rational, unsigned>> roots;
  UPoly rest = p.monic();
  unsigned zero_mult = 0;
  while (rest.degree() > 0 && sgn(rest.coeffs()[0]) == 0) {
    rest = divmod(rest, UPoly::s()).first;
    ++zero_mult;
  }
  if (zero_mult) roots.emplace_back(Rational(0), zero_mult);
  if (rest.degree() > 0) {
    // Integer coefficients for the rational root test.
    Integer l = 1;
    for (const auto& c : rest.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    Integer a0 = Rational(rest.coeffs().front() * l).get_num();
    Integer an = Rational(rest.coeffs().back() * l).get_num();
    UPoly sf = squarefree_part(rest);
    for (const auto& num : divisors(a0)) {
      for (const auto& den : divisors(an)) {
        for (int sign : {1, -1}) {
          Rational r(num * sign, den);
          r.canonicalize();
          if (r.get_den() != den) continue;  // already tried in lowest terms
          if (sgn(sf.eval(r)) != 0) continue;
          unsigned mult = 0;
          UPoly lin = UPoly::linear_root(r);
          while (true) {
            auto [q, rem] = divmod(rest, lin);
            if (!rem.is_zero()) break;
            rest = q;
            ++mult;
          }
          if (mult) roots.emplace_back(r, mult);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  return roots;
}

std::string to_string(const UPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "s";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace wbf
