#pragma once

#include <stdexcept>
#include <string>

namespace lrc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller-supplied parameters violate an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// A mathematical fact a construction relies on did not hold at runtime.
class AssertionFailure : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured work budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace lrc
