#pragma once

#include <stdexcept>
#include <string>

namespace wbf {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad expressions, mismatched variable counts, invalid weights.
class InputError : public Error {
 public:
  using Error::Error;
};

// Operands living over different algebra signatures.
class SignatureError : public Error {
 public:
  using Error::Error;
};

// A Gröbner/b-function computation exceeded its pair or degree budget.
class ResourceCapError : public Error {
 public:
  using Error::Error;
};

// Specialization of a parametric annihilator outside its guaranteed range.
class GuardError : public Error {
 public:
  GuardError(const std::string& what, long min_integer_root)
      : Error(what), min_integer_root_(min_integer_root) {}
  long min_integer_root() const { return min_integer_root_; }

 private:
  long min_integer_root_;
};

}  // namespace wbf
