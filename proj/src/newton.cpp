#include "wbf/newton.hpp"

#include <algorithm>
#include <set>

#include "wbf/errors.hpp"

namespace wbf {

// ------------------------------------------------------------ linear algebra

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RVec>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && sgn(m[sel][col]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      Rational k = m[r][col];
      for (std::size_t c = 0; c < ncols; ++c) m[r][c] -= k * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<RVec> null_space(const std::vector<RVec>& rows, std::size_t ncols) {
  std::vector<RVec> m = rows;
  for (const auto& r : m) {
    if (r.size() != ncols) throw InputError("matrix row has wrong length");
  }
  auto pivots = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RVec> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RVec v(ncols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(primitive_vector(v));
  }
  return basis;
}

std::size_t matrix_rank(const std::vector<RVec>& rows, std::size_t ncols) {
  std::vector<RVec> m = rows;
  return rref(m, ncols).size();
}

bool lp_feasible(const std::vector<RVec>& a, const RVec& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw InputError("right-hand side has wrong length");
  if (m == 0) return true;
  const std::size_t k = a.front().size();
  const std::size_t cols = k + m;  // rhs at index cols
  std::vector<RVec> t(m, RVec(cols + 1, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    Rational sign = sgn(b[i]) < 0 ? -1 : 1;
    for (std::size_t j = 0; j < k; ++j) t[i][j] = a[i][j] * sign;
    t[i][k + i] = 1;
    t[i][cols] = b[i] * sign;
  }
  RVec obj(cols + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) obj[j] -= t[i][j];
    obj[cols] -= t[i][cols];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = k + i;

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(obj[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen for phase one
    Rational inv = 1 / t[leave][enter];
    for (auto& x : t[leave]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    Rational f = obj[enter];
    for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  return sgn(obj[cols]) == 0;
}

RVec primitive_vector(const RVec& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  Integer g = 0;
  for (const auto& x : v) {
    Integer z = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  }
  if (g == 0) return v;
  RVec out;
  for (const auto& x : v) out.push_back(Rational(x.get_num() * (l / x.get_den()) / g));
  return out;
}

Rational dot(const RVec& a, const MultiIndex& g) {
  Rational r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (g[i]) r += a[i] * g[i];
  }
  return r;
}

// ------------------------------------------------------------------ polytope

namespace {

RVec to_rvec(const MultiIndex& g) {
  RVec v;
  for (std::size_t i = 0; i < g.size(); ++i) v.push_back(Rational(g[i]));
  return v;
}

std::vector<MultiIndex> support_of(const Polynomial& f) {
  if (f.is_zero()) throw InputError("the zero polynomial has no Newton polytope");
  std::vector<MultiIndex> s;
  for (const auto& [g, c] : f.terms()) s.push_back(g);
  return s;
}

}  // namespace

NewtonPolytope newton_polytope(const Polynomial& f) {
  NewtonPolytope np;
  np.support = support_of(f);
  const std::size_t n = f.nvars();
  for (std::size_t k = 0; k < np.support.size(); ++k) {
    // γ_k is a vertex iff it is not a convex combination of the other points.
    std::vector<RVec> a(n + 1);
    RVec b;
    for (std::size_t i = 0; i < n; ++i) b.push_back(Rational(np.support[k][i]));
    b.push_back(Rational(1));
    for (std::size_t j = 0; j < np.support.size(); ++j) {
      if (j == k) continue;
      for (std::size_t i = 0; i < n; ++i) a[i].push_back(Rational(np.support[j][i]));
      a[n].push_back(Rational(1));
    }
    bool inside = np.support.size() > 1 && lp_feasible(a, b);
    if (!inside) np.vertices.push_back(np.support[k]);
  }
  std::vector<RVec> diffs;
  RVec base = to_rvec(np.support.front());
  for (const auto& g : np.support) {
    RVec d = to_rvec(g);
    for (std::size_t i = 0; i < n; ++i) d[i] -= base[i];
    diffs.push_back(d);
  }
  np.dim = static_cast<unsigned>(matrix_rank(diffs, n));
  return np;
}

FaceData face_data(const Polynomial& f, const RVec& omega) {
  if (omega.size() != f.nvars()) throw InputError("weight length does not match the number of variables");
  if (std::all_of(omega.begin(), omega.end(), [](const Rational& w) { return sgn(w) == 0; })) {
    throw InputError("weight vector must be nonzero");
  }
  auto support = support_of(f);
  FaceData fd;
  fd.ord = dot(omega, support.front());
  for (const auto& g : support) fd.ord = std::min(fd.ord, dot(omega, g));
  fd.face.defining_weight = omega;
  fd.truncation = Polynomial(f.nvars());
  for (const auto& [g, c] : f.terms()) {
    if (dot(omega, g) == fd.ord) {
      fd.face.members.push_back(g);
      fd.truncation.add_term(g, c);
    }
  }
  for (const auto& v : newton_polytope(f).vertices) {
    if (dot(omega, v) == fd.ord) fd.face.vertices.push_back(v);
  }
  return fd;
}

Rational ord_f(const Polynomial& f, const RVec& omega) {
  auto support = support_of(f);
  if (omega.size() != f.nvars()) throw InputError("weight length does not match the number of variables");
  Rational best = dot(omega, support.front());
  for (const auto& g : support) best = std::min(best, dot(omega, g));
  return best;
}

std::vector<RVec> face_dual_space(const Polynomial& f, const Face& face) {
  const std::size_t n = f.nvars();
  if (face.members.empty()) throw InputError("empty face");
  std::vector<RVec> rows;
  RVec g0 = to_rvec(face.members.front());
  for (const auto& g : face.members) {
    RVec d = to_rvec(g);
    for (std::size_t i = 0; i < n; ++i) d[i] -= g0[i];
    rows.push_back(d);
  }
  return null_space(rows, n);
}

// ------------------------------------------------------------------ dual fan

namespace {

bool satisfies(const std::vector<RVec>& ineq, const RVec& w) {
  for (const auto& a : ineq) {
    Rational s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += a[i] * w[i];
    if (sgn(s) < 0) return false;
  }
  return true;
}

// Counterclockwise angle key for n = 2: (half, cross-product comparison).
bool ccw_less(const RVec& a, const RVec& b) {
  auto half = [](const RVec& v) { return (sgn(v[1]) < 0 || (sgn(v[1]) == 0 && sgn(v[0]) < 0)) ? 1 : 0; };
  int ha = half(a);
  int hb = half(b);
  if (ha != hb) return ha < hb;
  return sgn(Rational(a[0] * b[1] - a[1] * b[0])) > 0;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Fan dual_fan(const Polynomial& f) {
  const std::size_t n = f.nvars();
  if (n == 0 || n > 3) throw InputError("dual fan is supported for 1 to 3 variables");
  NewtonPolytope np = newton_polytope(f);
  Fan fan;
  fan.n = n;
  std::set<RVec> all_rays;
  for (const auto& v : np.vertices) {
    Cone cone;
    cone.vertex = v;
    for (const auto& u : np.vertices) {
      if (u == v) continue;
      RVec a;
      for (std::size_t i = 0; i < n; ++i) a.push_back(Rational(long(u[i]) - long(v[i])));
      cone.inequalities.push_back(primitive_vector(a));
    }
    cone.lineality = null_space(cone.inequalities, n);
    const std::size_t pointed_dim = n - cone.lineality.size();
    std::set<RVec> rays;
    if (pointed_dim > 0) {
      std::vector<std::vector<std::size_t>> choices;
      std::vector<std::size_t> cur;
      subsets(cone.inequalities.size(), pointed_dim - 1, 0, cur, choices);
      for (const auto& ch : choices) {
        std::vector<RVec> eqs = cone.lineality;
        for (auto i : ch) eqs.push_back(cone.inequalities[i]);
        auto ns = null_space(eqs, n);
        if (ns.size() != 1) continue;
        for (int sign : {1, -1}) {
          RVec d = ns.front();
          for (auto& x : d) x *= sign;
          if (satisfies(cone.inequalities, d)) rays.insert(primitive_vector(d));
        }
      }
    }
    cone.rays.assign(rays.begin(), rays.end());
    cone.interior = RVec(n, Rational(0));
    for (const auto& r : cone.rays) {
      for (std::size_t i = 0; i < n; ++i) cone.interior[i] += r[i];
    }
    if (std::all_of(cone.interior.begin(), cone.interior.end(), [](const Rational& x) { return sgn(x) == 0; })) {
      cone.interior[0] = 1;
    }
    all_rays.insert(rays.begin(), rays.end());
    fan.maximal.push_back(std::move(cone));
  }
  fan.rays.assign(all_rays.begin(), all_rays.end());
  if (n == 2) std::sort(fan.rays.begin(), fan.rays.end(), ccw_less);
  return fan;
}

}  // namespace wbf
