#pragma once

#include <stdexcept>
#include <string>

namespace radspec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Physical or reduced parameters outside their admissible range.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Malformed input to a numerical primitive (empty polynomial, bad sizes, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a special function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The truncation frequency omega = delta^2 / (m beta^2) is undefined (beta = 0).
class FrequencyUndefined : public Error {
 public:
  using Error::Error;
};

/// A check that holds mathematically failed at runtime; indicates a numerics bug.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

/// The requested basis cannot be orthonormalised at working precision.
class BasisTooLarge : public Error {
 public:
  using Error::Error;
};

/// A matrix element evaluated to NaN or infinity.
class MatrixElementError : public Error {
 public:
  using Error::Error;
};

/// Iterative solver failure (eigensolver did not converge, degenerate spectrum, ...).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Adaptive procedure exhausted its budget before reaching the requested accuracy.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

/// Input file does not match its schema. `key()` names the offending field.
class ParseError : public Error {
 public:
  ParseError(std::string key, const std::string& what)
      : Error(what), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

}  // namespace radspec
