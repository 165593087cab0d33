#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wbf/groebner.hpp"
#include "wbf/poly.hpp"
#include "wbf/weyl.hpp"

namespace wbf {

// Grammar (whitespace ignored):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*' factor) | ('/' number))*
//   factor := atom ['^' natural]
//   atom   := number | name | '(' expr ')'
// Names: the coordinates, "d" + coordinate (or d1..dn for x1..xn), declared
// central parameters, "sigma" and "dt" when the signature has the shift pair.
// Products are taken in the Weyl algebra, so "dx*x" is x*dx + 1.
WeylOperator parse_operator(std::string_view text, const SignaturePtr& sig);
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars);

// Coordinates used by an expression: x, y, z (prefix up to the largest one
// used) or x1..xk. Operator names like dx count as uses of x.
std::vector<std::string> infer_variables(std::string_view text);
// Polynomial with inferred coordinates.
Polynomial parse_polynomial(std::string_view text);

// Comma separated rationals; the zero vector is rejected.
std::vector<Rational> parse_weight(std::string_view text);

// Ideal file: optional "vars: x y" and "params: s" headers, one operator per
// line, '#' starts a comment.
IdealPresentation parse_ideal(std::string_view text);

}  // namespace wbf
