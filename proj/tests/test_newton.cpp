#include <doctest.h>

#include <set>

#include "support.hpp"
#include "wbf/errors.hpp"

using namespace wbf;
using namespace wbf::test;

namespace {
std::set<MultiIndex> as_set(const std::vector<MultiIndex>& v) { return {v.begin(), v.end()}; }
std::set<RVec> as_set(const std::vector<RVec>& v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("newton_polytope") {
  CHECK(as_set(newton_polytope(poly2("x^3+y^4")).vertices) == std::set<MultiIndex>{{3, 0}, {0, 4}});
  auto np = newton_polytope(poly2("y+x^3+y^2"));
  CHECK(as_set(np.vertices) == std::set<MultiIndex>{{0, 1}, {0, 2}, {3, 0}});
  CHECK(np.dim == 2);
  // interior support point is not a vertex
  CHECK(as_set(newton_polytope(poly2("1+x^2+y^2+x*y")).vertices) == std::set<MultiIndex>{{0, 0}, {2, 0}, {0, 2}});
  CHECK_THROWS_AS(newton_polytope(Polynomial(2)), InputError);
}

TEST_CASE("face_data") {
  auto a = face_data(poly2("x^3+y^4"), {1, 1});
  CHECK(a.ord == 3);
  CHECK(a.truncation == poly2("x^3"));

  auto b = face_data(poly2("y+x^3+y^2"), {-2, -3});
  CHECK(b.ord == -6);
  CHECK(as_set(b.face.members) == std::set<MultiIndex>{{3, 0}, {0, 2}});
  CHECK(b.truncation == poly2("x^3+y^2"));

  auto c = face_data(poly2("1+x+y"), {1, 1});
  CHECK(c.ord == 0);
  CHECK(c.truncation == Polynomial::constant(2, 1));

  CHECK_THROWS_AS(face_data(poly2("x+y"), {0, 0}), InputError);
}

TEST_CASE("dual_fan") {
  Fan fan = dual_fan(poly2("y+x^3+y^2"));
  CHECK(as_set(fan.rays) == std::set<RVec>{{1, 3}, {1, 0}, {-2, -3}});
  REQUIRE(fan.maximal.size() == 3);
  std::set<std::set<RVec>> cones;
  for (const auto& c : fan.maximal) cones.insert(as_set(c.rays));
  CHECK(cones == std::set<std::set<RVec>>{{{1, 3}, {1, 0}}, {{1, 0}, {-2, -3}}, {{-2, -3}, {1, 3}}});

  // segment: two half-planes split by the line p w1 = q w2
  Fan seg = dual_fan(poly2("x^2+y^3"));
  CHECK(seg.maximal.size() == 2);
  for (const auto& c : seg.maximal) {
    REQUIRE(c.lineality.size() == 1);
    auto l = c.lineality[0];
    CHECK(2 * l[0] == 3 * l[1]);
  }

  CHECK(as_set(dual_fan(poly2("(y+x^3+y^2)^2")).rays) == as_set(fan.rays));
  CHECK_THROWS(dual_fan(poly("x1+x2+x3+x4")));
}

TEST_CASE("face_dual_space") {
  Polynomial f = poly2("x^2+y^3");
  auto vertex = face_data(f, {1, 1}).face;  // {(2,0)}
  CHECK(face_dual_space(f, vertex).size() == 2);
  auto segment = face_data(f, {3, 2}).face;
  auto v = face_dual_space(f, segment);
  REQUIRE(v.size() == 1);
  CHECK(2 * v[0][0] == 3 * v[0][1]);

  Polynomial g = poly2("y+x^3+y^2");
  auto v2 = face_dual_space(g, face_data(g, {-2, -3}).face);
  REQUIRE(v2.size() == 1);
  auto p = primitive_vector(v2[0]);
  CHECK((p == RVec{2, 3} || p == RVec{-2, -3}));
}

TEST_CASE("ord is the minimum over the support") {
  Gen g(41);
  for (int k = 0; k < 50; ++k) {
    Polynomial f = g.polynomial(2, 5, 6);
    auto w = g.weight(2);
    Rational want = dot(w, f.terms().begin()->first);
    for (const auto& [m, c] : f.terms()) want = std::min(want, dot(w, m));
    CHECK(ord_f(f, w) == want);
  }
}
