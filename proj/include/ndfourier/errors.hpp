#pragma once

#include <stdexcept>
#include <string>

namespace ndf {

// Base of every error raised by the library. The CLI maps subclasses to
// exit codes, so keep the hierarchy flat.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// An upper-coordinate value whose digits put it outside the Cantor set
// selected by the branch.
class NotInCantorSet : public DomainError {
 public:
  using DomainError::DomainError;
};

class ContextMismatch : public Error {
 public:
  using Error::Error;
};

// Division by an element whose lower coordinate is zero, i.e. by 0'.
class DivisionByZeroPrime : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedContext : public Error {
 public:
  using Error::Error;
};

class NonDifferentiable : public Error {
 public:
  using Error::Error;
};

class NonConvergent : public Error {
 public:
  using Error::Error;
};

class QuadratureNonConvergent : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ndf
