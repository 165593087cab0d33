#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wbf {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "a", "-a" or "a/b" (decimal integers). Throws InputError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace wbf
