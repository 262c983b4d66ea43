#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace k3 {

// Expression templates are off so that `auto` and Eigen's scalar handling
// never capture a dangling temporary.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic between values living in different field contexts.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (zero polynomial, degenerate
/// Gram matrix, bad index, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Inputs that violate an operation's stated contract (e.g. a valuation
/// triple that matches no row of the Kodaira table).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Weierstrass data with identically vanishing discriminant.
class InvalidModel : public Error {
 public:
  using Error::Error;
};

/// Syntax error in one of the textual grammars. `position` is a 0-based
/// byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

inline std::string to_string(const Integer& v) { return v.str(); }
inline std::string to_string(const Rational& v) { return v.str(); }

inline Integer abs_value(const Integer& v) { return v < 0 ? Integer(-v) : v; }

}  // namespace k3
