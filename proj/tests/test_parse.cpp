#include <doctest.h>

#include "support.hpp"
#include "wbf/errors.hpp"

using namespace wbf;
using namespace wbf::test;

TEST_CASE("parse examples") {
  Polynomial f = parse_polynomial("x^3+y^4");
  CHECK(f.nvars() == 2);
  CHECK(f.size() == 2);
  CHECK(op("3*x^2*dy - 4*y^3*dx") == op("3*x^2*dy") - op("4*y^3*dx"));
  CHECK(op("dx*x") == op("x*dx+1"));
  CHECK(op("(x+1)^2/4") == op("1/4*x^2+1/2*x+1/4"));
  CHECK(parse_polynomial("x1*x3+1").nvars() == 3);
  CHECK_THROWS_AS(parse_polynomial("x1*x3+d1"), InputError);
}

TEST_CASE("variable inference") {
  CHECK(infer_variables("y+x^3") == std::vector<std::string>{"x", "y"});
  CHECK(infer_variables("z") == std::vector<std::string>{"x", "y", "z"});
  CHECK(infer_variables("x2*d3") == std::vector<std::string>{"x1", "x2", "x3"});
  CHECK(infer_variables("5") == std::vector<std::string>{"x"});
  CHECK_THROWS_AS(infer_variables("x+x2"), InputError);
}

TEST_CASE("syntax errors carry a position") {
  try {
    op("x+*y");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("position 2") != std::string::npos);
  }
  CHECK_THROWS_AS(op("x+w"), InputError);
  CHECK_THROWS_AS(op("x/y"), InputError);
  CHECK_THROWS_AS(op("x^-1"), InputError);
  CHECK_THROWS_AS(op("(x+1"), InputError);
  CHECK_THROWS_AS(op("x/0"), InputError);
  CHECK_THROWS_AS(parse_polynomial("dx", {"x"}), InputError);
}

TEST_CASE("weights") {
  CHECK(parse_weight("1, -1") == std::vector<Rational>{1, -1});
  CHECK(parse_weight("1/2,3") == std::vector<Rational>{R(1, 2), 3});
  CHECK_THROWS_AS(parse_weight("0,0"), InputError);
  CHECK_THROWS_AS(parse_weight("1,,2"), InputError);
  CHECK_THROWS_AS(parse_weight("1.5"), InputError);
}

TEST_CASE("ideal files") {
  auto i = parse_ideal("vars: x y\n# unit ideal example\ny+dx+dy\n\nx+dx+dy+1  # second\n");
  CHECK(i.generators().size() == 2);
  CHECK(i.sig().n() == 2);
  auto p = parse_ideal("vars: x\nparams: s\nx*dx - s\n");
  CHECK(p.sig().params() == std::vector<std::string>{"s"});
  CHECK(parse_ideal("dz").sig().n() == 3);
  CHECK_THROWS_AS(parse_ideal("# nothing\n"), InputError);
  try {
    parse_ideal("vars: x\ndx\nx+q\n");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("generator 2") != std::string::npos);
  }
}
