#include <doctest.h>

#include "support.hpp"
#include "wbf/errors.hpp"

using namespace wbf;
using namespace wbf::test;

TEST_CASE("poly_arith examples") {
  CHECK(poly_arith(ArithOp::add, poly2("x"), poly2("-x")).is_zero());
  CHECK(poly_arith(ArithOp::mul, poly2("x+y"), poly2("x-y")) == poly2("x^2-y^2"));
  CHECK(poly_arith(ArithOp::mul, poly2("x^2+y^3"), poly2("x^2+y^3")) == poly2("x^4+2*x^2*y^3+y^6"));
}

TEST_CASE("arithmetic needs matching variable counts") {
  CHECK_THROWS_AS(poly_arith(ArithOp::add, poly("x"), poly2("y")), InputError);
}

TEST_CASE("schoolbook product oracle") {
  Gen g(11);
  for (int k = 0; k < 50; ++k) {
    Polynomial a = g.polynomial(2, 4, 4), b = g.polynomial(2, 4, 4);
    Polynomial want(2);
    for (const auto& [ma, ca] : a.terms())
      for (const auto& [mb, cb] : b.terms()) want.add_term(ma + mb, ca * cb);
    CHECK(a * b == want);
  }
}

TEST_CASE("partial_derive") {
  CHECK(partial_derive(poly("x^3"), MultiIndex{3}) == Polynomial::constant(1, 6));
  CHECK(partial_derive(poly2("x^2*y"), MultiIndex{1, 1}) == poly2("2*x"));
  CHECK(partial_derive(poly2("y+x^3+y^2"), MultiIndex{0, 2}) == Polynomial::constant(2, 2));
  CHECK(partial_derive(poly2("x*y"), MultiIndex{2, 0}).is_zero());
}

TEST_CASE("partial_derive agrees with iterated single derivatives") {
  Gen g(12);
  for (int k = 0; k < 40; ++k) {
    Polynomial f = g.polynomial(2, 5, 6);
    MultiIndex b = g.exponent(2, 4);
    Polynomial it = f;
    for (unsigned i = 0; i < b[0]; ++i) it = it.derivative(0);
    for (unsigned i = 0; i < b[1]; ++i) it = it.derivative(1);
    CHECK(partial_derive(f, b) == it);
  }
}

TEST_CASE("ratfun_reduce") {
  Polynomial x = Polynomial::variable(1, 0);
  auto r = ratfun_reduce(poly("x^2-1"), poly("x-1"));
  CHECK(r.numerator() == poly("x+1"));
  CHECK(r.denominator() == Polynomial::constant(1, 1));

  auto z = ratfun_reduce(Polynomial(1), poly("x^2+1"));
  CHECK(z.is_zero());
  CHECK(z.denominator() == Polynomial::constant(1, 1));

  auto h = ratfun_reduce(poly("2*x"), poly("4*x^2"));
  CHECK(h.numerator() == Polynomial::constant(1, R(1, 2)));
  CHECK(h.denominator() == x);

  CHECK_THROWS(ratfun_reduce(x, Polynomial(1)));
}

TEST_CASE("polynomial gcd and exact division") {
  Polynomial f = poly2("x^2*y+x*y^2");
  CHECK(gcd(f, poly2("x^2+x*y")) == poly2("x^2+x*y"));
  CHECK(exact_divide(f, poly2("x+y")) == poly2("x*y"));
  CHECK_THROWS(exact_divide(f, poly2("x+2*y")));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("-10/3") == R(-10, 3));
  CHECK(parse_rational("4/2") == 2);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK(factorial(5) == 120);
  CHECK(binomial(6, 2) == 15);
}

TEST_CASE("univariate helpers") {
  UPoly p = UPoly::from_roots({-3, R(-10, 3), R(-11, 3)});
  auto rr = rational_roots(p);
  REQUIRE(rr.size() == 3);
  CHECK(rr[0].first == -3);
  CHECK(rr[1].first == R(-10, 3));
  CHECK(rr[2].first == R(-11, 3));

  CHECK(squarefree_part(UPoly::from_roots({-1, -1, -2})) == UPoly::from_roots({-1, -2}));
  CHECK(squarefree_part(UPoly::from_roots({-3, -3, -3, -3})) == UPoly::from_roots({-3}));
  CHECK(squarefree_part(p) == p);

  UPoly small = UPoly::from_roots({-3, -4, -5});
  UPoly big = UPoly::from_roots({-3, -4, -5, -6});
  CHECK(divides(small, big));
  CHECK_FALSE(divides(big, small));
  CHECK(divides(big, big));
  CHECK(UPoly::from_roots({-1}).substitute_affine(-1, -1) == UPoly::s().scaled(-1));
}
