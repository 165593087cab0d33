#include <doctest.h>

#include "support.hpp"
#include "wbf/errors.hpp"

using namespace wbf;
using namespace wbf::test;

namespace {
RationalFunction inv(const Polynomial& f) { return ratfun_reduce(Polynomial::constant(f.nvars(), 1), f); }
}  // namespace

TEST_CASE("weyl_mul examples") {
  CHECK(op("dx") * op("x") == op("x*dx+1"));
  CHECK(op("x*dx") * op("x*dx") == op("x^2*dx^2+x*dx"));
  CHECK(op("dy") * op("x") == op("x*dy"));

  auto sig = make_signature({"x"}, {}, true);
  auto dt = WeylOperator::dt(sig), sigma = WeylOperator::sigma(sig);
  CHECK(dt * sigma == sigma * dt - dt);
  CHECK(sigma * dt == dt * sigma + dt);
}

TEST_CASE("signature mismatch is rejected") {
  CHECK_THROWS_AS(op("dx", 1) * op("dx", 2), SignatureError);
  CHECK_THROWS_AS(op("dx", 1) + op("dx", 2), SignatureError);
}

TEST_CASE("action on polynomials") {
  CHECK(apply_to_poly(op("dx", 1), poly("x^2")) == poly("2*x"));
  CHECK(apply_to_poly(op("3*x*dx+2*y*dy-6"), poly2("x^2+y^3")).is_zero());
  CHECK(apply_to_poly(op("2*x*dy"), poly2("y+x^3+y^2")) == poly2("2*x+4*x*y"));
}

TEST_CASE("action of the shift pair is an error") {
  auto sig = make_signature({"x"}, {}, true);
  CHECK_THROWS(apply_to_poly(WeylOperator::dt(sig), poly("x")));
}

TEST_CASE("action on rational functions") {
  CHECK(apply_to_ratfun(op("dx", 1), inv(poly("x"))) == ratfun_reduce(poly("-1"), poly("x^2")));
  CHECK(apply_to_ratfun(op("x*dx+y*dy+3"), inv(poly2("x*y*(x+y)"))).is_zero());
  CHECK(apply_to_ratfun(op("3*x^2*dy-4*y^3*dx"), inv(poly2("x^3+y^4"))).is_zero());
  CHECK(apply_to_ratfun(op("4*x*dx+3*y*dy+12"), inv(poly2("x^3+y^4"))).is_zero());
}

TEST_CASE("inverse_derivative_formula examples") {
  Polynomial f = poly2("y+x^3+y^2");
  for (std::size_t i = 0; i < 2; ++i) {
    MultiIndex e = MultiIndex::unit(2, i);
    RationalFunction want = ratfun_reduce(-partial_derive(f, e), f * f);
    CHECK(inverse_derivative_formula(f, e) == want);
  }
  CHECK(inverse_derivative_formula(poly("x"), MultiIndex{2}) == ratfun_reduce(poly("2"), poly("x^3")));
  CHECK(inverse_derivative_formula(poly2("x*y"), MultiIndex{1, 1}) ==
        ratfun_reduce(Polynomial::constant(2, 1), poly2("x^2*y^2")));
}

TEST_CASE("theta_to_weyl") {
  auto sig = AlgebraSignature::weyl(1);
  Polynomial theta = poly("x");  // θ_1 written in the first symbol
  CHECK(theta_to_weyl(theta, sig) == op("x*dx", 1));
  CHECK(theta_to_weyl(poly("x+1"), sig) == op("dx*x", 1));
  CHECK(theta_to_weyl(poly("x^2"), sig) == op("x^2*dx^2+x*dx", 1));
  // ∂^m x^m = (θ+1)⋯(θ+m)
  CHECK(theta_to_weyl(poly("(x+1)*(x+2)*(x+3)"), sig) == op("dx^3*x^3", 1));
}

TEST_CASE("closed-form product matches the rewriting product") {
  auto sig = make_signature({"x", "y"}, {"s"}, true);
  Gen g(21);
  for (int k = 0; k < 60; ++k) {
    WeylOperator a = g.any_slots(sig, 3, 4), b = g.any_slots(sig, 3, 4);
    CHECK(weyl_mul(a, b) == weyl_mul_by_rewriting(a, b));
  }
}

TEST_CASE("to_string") {
  CHECK(to_string(op("dx*x")) == "x*dx + 1");
  CHECK(to_string(WeylOperator(d2())) == "0");
}
