#include <doctest.h>

#include "support.hpp"
#include "wbf/errors.hpp"

using namespace wbf;
using namespace wbf::test;

TEST_CASE("weighted_degree") {
  CHECK(weighted_degree(op("x*dx", 1), WeightSpec({-1}, {1})) == 0);
  CHECK(weighted_degree(op("dx^2"), WeightSpec::from_omega({3, 5})) == 6);
  CHECK(weighted_degree(op("3*x^2*dy-4*y^3*dx"), WeightSpec::from_omega({1, 1})) == -1);
}

TEST_CASE("initial_form") {
  auto w = WeightSpec::from_omega({1, 1});
  CHECK(initial_form(op("3*x^2*dy-4*y^3*dx"), w) == op("3*x^2*dy"));
  CHECK(initial_form(op("x*dx+y*dy+7"), w) == op("x*dx+y*dy+7"));
  // x weighs -1, y weighs 1, dx weighs 1
  CHECK(initial_form(op("(y+x^3+y^2)*dx+3*x^2"), WeightSpec::from_omega({1, -1})) == op("y^2*dx"));
}

TEST_CASE("homogenization") {
  auto hsig = homogenized_signature(*d2());
  CHECK(homogenize(op("x*dx+1"), hsig) == parse_operator("x*dx+h^2", hsig));
  CHECK(homogenize(op("x*dy+y*dx"), hsig) == parse_operator("x*dy+y*dx", hsig));
  // Euler operator of the (4,6) family: 3x∂_x + 2y∂_y − ℓ·12 h²
  CHECK(homogenize(op("3*x*dx+2*y*dy+12"), hsig) == parse_operator("3*x*dx+2*y*dy+12*h^2", hsig));
  CHECK(dehomogenize(homogenize(op("x^2*dy+dx+3"), hsig), d2()) == op("x^2*dy+dx+3"));
}

TEST_CASE("term orders are admissible and total") {
  auto sig = d2();
  CHECK(TermOrder::grlex(*sig).is_admissible());
  CHECK(TermOrder::weighted(*sig, WeightSpec({1, 1}, {2, 0})).is_admissible());
  CHECK_FALSE(TermOrder::weighted(*sig, WeightSpec::from_omega({1, 1})).is_admissible());
  CHECK(TermOrder::elimination(*sig, {sig->d_slot(0)}).is_admissible());

  Gen g(31);
  auto order = TermOrder::grlex(*sig);
  for (int k = 0; k < 100; ++k) {
    auto a = leading_term(g.weyl(sig, 1, 5), order).first;
    auto b = leading_term(g.weyl(sig, 1, 5), order).first;
    auto c = leading_term(g.weyl(sig, 1, 5), order).first;
    CHECK(order.compare(a, b) == -order.compare(b, a));
    // multiplicative
    Monomial ac = a, bc = b;
    for (std::size_t s = 0; s < sig->slots(); ++s) {
      ac.e[s] = static_cast<uint16_t>(ac.e[s] + c.e[s]);
      bc.e[s] = static_cast<uint16_t>(bc.e[s] + c.e[s]);
    }
    CHECK(order.compare(ac, bc) == order.compare(a, b));
  }
}

TEST_CASE("representative orders for the cusp leading terms") {
  auto sig = d2();
  const long p = 3, q = 4, ell = -1;
  auto lt = [&](const std::string& s, const TermOrder& o) {
    auto [m, c] = leading_term(op(s), o);
    return WeylOperator::monomial(sig, m, c);
  };
  std::string e = std::to_string(q) + "*x*dx+" + std::to_string(p) + "*y*dy-(" + std::to_string(ell * p * q) + ")";

  auto o1 = TermOrder::weighted(*sig, WeightSpec({1, 1}, {2, 0}));  // u1+v1 > u2+v2 > 0
  CHECK(lt(e, o1) == op("4*x*dx"));
  CHECK(lt("y^4*dy+4*y^3", o1) == op("y^4*dy"));

  auto o2 = TermOrder::weighted(*sig, WeightSpec({1, 1}, {0, 2}));  // u2+v2 > u1+v1 > 0
  CHECK(lt(e, o2) == op("3*y*dy"));
  CHECK(lt("x^3*dx+3*x^2", o2) == op("x^3*dx"));

  auto o3 = TermOrder::weighted(*sig, WeightSpec({1, 2}, {4, 0}));  // also q·u2 > p·u1
  CHECK(lt("3*x^2*dy-4*y^3*dx", o3) == op("-4*y^3*dx"));
  CHECK(lt(e, o3) == op("4*x*dx"));
  CHECK(lt("(x^3+y^4)*dy+4*y^3", o3) == op("y^4*dy"));
}

TEST_CASE("order rows must match the slot count") {
  CHECK_THROWS_AS(TermOrder(4, {{1, 1}}, {0, 1, 2, 3}), InputError);
  CHECK_THROWS_AS(TermOrder::weighted(*d2(), WeightSpec({1}, {1})), InputError);
}
