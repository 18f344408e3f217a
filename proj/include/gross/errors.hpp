#pragma once

#include <stdexcept>
#include <string>

namespace gross {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPrecision : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Caller supplied data violating a documented precondition (non-prime q,
/// wrong residue class, mismatched discriminant, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Ideal or element not coprime to the conductor (sqrt(-q)).
class ConductorError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

class RootNumberUnstable : public Error {
 public:
  using Error::Error;
};

class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant. Never expected; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gross
