#pragma once

#include <stdexcept>
#include <string>

namespace abel {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition or data invariant does not hold. The message
/// names the violated invariant.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class FieldMismatchError : public PreconditionError {
 public:
  FieldMismatchError() : PreconditionError("field mismatch: exact and binary64 coefficients mixed") {}
};

class RepresentabilityError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Internal contradiction: inputs claimed to satisfy a relation that they do not.
class InconsistencyError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Numeric procedures that could not reach a decision.
class NumericError : public Error {
 public:
  using Error::Error;
};

class BoundaryUndecidableError : public NumericError {
 public:
  using NumericError::NumericError;
};

class FactorizationFailedError : public NumericError {
 public:
  using NumericError::NumericError;
};

class StiffnessError : public NumericError {
 public:
  using NumericError::NumericError;
};

class InconclusiveError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace abel
