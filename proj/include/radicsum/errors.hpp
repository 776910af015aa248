#pragma once

#include <stdexcept>
#include <string>

namespace radicsum {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside its mathematical or configured domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A sum or closed-form term left the finite double range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A limit extrapolation did not settle within its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Throws OverflowError naming `what` if `value` is not finite.
double require_finite(double value, const std::string& what);

}  // namespace radicsum
