#pragma once

#include <stdexcept>
#include <string>

namespace copfaces {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (scalars, problem files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands of incompatible order or length.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A domain-type invariant was violated on construction or input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive routine asked to run above the configured order / size cap.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// An operation that requires a copositive matrix received one that is not.
class NotCopositiveError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Signals a bug, never a user error.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace copfaces
