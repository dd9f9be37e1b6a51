#pragma once

#include <stdexcept>
#include <string>

namespace ballft {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gamma-type function evaluated at a nonpositive integer.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A result left the range of binary64.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A point outside the domain of the function (e.g. outside the unit ball).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A denominator Pochhammer factor vanished inside a terminating series.
class DenominatorPoleError : public Error {
 public:
  using Error::Error;
};

/// A quadrature node produced NaN or Inf.
class NonFiniteIntegrandError : public Error {
 public:
  using Error::Error;
};

/// Parameters violating a documented precondition (a <= 0, mu == 0, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

}  // namespace ballft
