#include <doctest.h>

#include <cstdlib>

#include "support.hpp"
#include "wbf/errors.hpp"

using namespace wbf;
using namespace wbf::test;

TEST_CASE("buchberger examples") {
  auto sig = d2();
  auto g = buchberger(ideal(2, {"dx", "x*dx"}), TermOrder::grlex(*sig));
  REQUIRE(g.elements.size() == 1);
  CHECK(g.elements[0] == op("dx"));
  CHECK(is_groebner(g.elements, g.order));

  auto unit = buchberger(ideal(2, {"y+dx+dy", "x+dx+dy+1"}), TermOrder::grlex(*sig));
  CHECK_FALSE(unit.is_unit());  // only its initial ideal at (1,1) is the unit ideal
}

TEST_CASE("buchberger rejects non-admissible orders") {
  auto sig = d2();
  CHECK_THROWS_AS(buchberger(ideal(2, {"dx"}), TermOrder::weighted(*sig, WeightSpec::from_omega({1, 1}))),
                  InputError);
}

TEST_CASE("resource cap is a distinct error") {
  Budget tiny;
  tiny.max_pairs = 1;
  auto big = ideal(2, {"x^3*dy^2+y*dx", "y^3*dx^2+x*dy+1", "x*y*dx*dy+x+y"});
  CHECK_THROWS_AS(buchberger(big, TermOrder::grlex(*d2()), tiny), ResourceCapError);
}

TEST_CASE("budget from the environment") {
  setenv("WBF_BUDGET_PAIRS", "123", 1);
  setenv("WBF_BUDGET_DEGREE", "17", 1);
  Budget b = Budget::from_env();
  CHECK(b.max_pairs == 123);
  CHECK(b.max_degree == 17);
  setenv("WBF_BUDGET_PAIRS", "0", 1);
  CHECK_THROWS_AS(Budget::from_env(), InputError);
  unsetenv("WBF_BUDGET_PAIRS");
  unsetenv("WBF_BUDGET_DEGREE");
}

TEST_CASE("normal_form examples") {
  auto g = buchberger(ideal(2, {"dx"}), TermOrder::grlex(*d2()));
  CHECK(normal_form(op("x*dx"), g).is_zero());
  CHECK(normal_form(op("x"), g) == op("x"));

  for (const auto& w : compass()) {
    auto in = initial_ideal(ideal(2, {"dx", "dy"}), w);
    CHECK(normal_form(euler_symbol(d2(), w), in.basis).is_zero());
  }
}

TEST_CASE("is_groebner") {
  auto o = TermOrder::grlex(*d2());
  CHECK(is_groebner({op("dx")}, o));
  // x∂_x and ∂_x x = x∂_x + 1 generate the unit ideal, so the pair is not a basis.
  CHECK_FALSE(is_groebner({op("x*dx"), op("dx*x")}, o));
  CHECK(is_groebner({op("1")}, o));
}

TEST_CASE("initial ideals of 1/(y+x^3+y^2)") {
  auto ann = annihilator(poly("y+x^3+y^2"), -1).ideal;
  CHECK(same_ideal(initial_ideal(ann, {1, -1}).ideal, ideal(2, {"dx", "y^2*dy+2*y"})));
  CHECK(same_ideal(initial_ideal(ann, {0, -1}).ideal,
                   ideal(2, {"y*dx", "y^2*dy+2*y", "4*x^3*dx+6*x^2*y*dy+12*x^2-dx"})));
}

TEST_CASE("initial ideal of the cusp annihilator, p w1 > q w2") {
  for (auto [p, q] : {std::pair{2L, 3L}, {3L, 4L}}) {
    for (long ell : {-1L, -2L}) {
      auto ann = ann_cusp_family(p, q, {}, ell);
      std::vector<Rational> w{Rational(q + 1), Rational(p)};
      auto want = IdealPresentation(
          d2(), {op("y^" + std::to_string(q - 1) + "*dx"),
                 op(std::to_string(q) + "*x*dx+" + std::to_string(p) + "*y*dy-(" + std::to_string(ell * p * q) + ")"),
                 op("y^" + std::to_string(q) + "*dy-(" + std::to_string(ell * q) + ")*y^" + std::to_string(q - 1))});
      CHECK(same_ideal(initial_ideal(ann, w).ideal, want));
    }
  }
}

TEST_CASE("unit initial ideal is flagged") {
  auto in = initial_ideal(ideal(2, {"y+dx+dy", "x+dx+dy+1"}), {1, 1});
  CHECK(in.unit_ideal);
  CHECK(in.basis.is_unit());
}

TEST_CASE("initial_ideal rejects the zero weight") {
  CHECK_THROWS_AS(initial_ideal(ideal(2, {"dx"}), {0, 0}), InputError);
}

TEST_CASE("eliminate") {
  auto sig = make_signature({"x"}, {}, true);
  IdealPresentation i(sig, {parse_operator("sigma+x*dt", sig), parse_operator("dx+dt", sig)});
  auto e = eliminate(i, {sig->dt_slot()});
  IdealPresentation want(sig, {parse_operator("x*dx-sigma", sig)});
  CHECK(same_ideal(e, want));

  auto plain = ideal(2, {"x*dx+1", "dy"});
  CHECK(same_ideal(eliminate(plain, {}), plain));
}

TEST_CASE("ideal_quotient") {
  // (∂_x) : x = Ann(x) = (x∂_x − 1, ∂_x²)
  auto q = ideal_quotient(IdealPresentation(AlgebraSignature::weyl(1), {op("dx", 1)}), op("x", 1));
  auto g = buchberger(q, TermOrder::grlex(*AlgebraSignature::weyl(1)));
  CHECK(in_ideal(op("dx^2", 1), g));
  CHECK_FALSE(in_ideal(op("dx", 1), g));
  CHECK(in_ideal(op("x*dx-1", 1), g));
  CHECK_FALSE(in_ideal(op("x*dx+1", 1), g));
}
