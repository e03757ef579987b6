#pragma once

#include <stdexcept>
#include <string>

namespace fracspec {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs violate a precondition. The CLI maps these to exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A Gamma argument landed on a nonpositive integer.
class PoleError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Parameters fall outside the regime where a formula is valid.
class RegimeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A spectral path starts or ends on the Jacobi threshold.
class EndpointDegenerateError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A computation produced an untrustworthy result. The CLI maps these to
/// exit code 3.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class NumericalIntegrityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class BracketingError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace fracspec
