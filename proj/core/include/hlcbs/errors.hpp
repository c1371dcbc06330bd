#pragma once

#include <stdexcept>
#include <string>

namespace hlcbs {

// Root of every error raised by the library. Callers that only care about
// "bad input" versus "internal limit hit" can catch the intermediate types.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Argument sits on a pole of the Gamma function (a in (1/2)Z_{<=0}).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Hypergeometric lower parameter is a nonpositive integer.
class LowerParamPole : public DomainError {
 public:
  using DomainError::DomainError;
};

// Series argument on or outside the unit disc.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

// Term budget exhausted before the requested error bound was met.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// PiExtValue product would leave span{1, sqrt3, pi, sqrt3*pi}.
class MultiplicationOutOfBasis : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownCheck : public Error {
 public:
  using Error::Error;
};

}  // namespace hlcbs
