#pragma once

#include <stdexcept>
#include <string>

namespace pfc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (x <= 0 for Gamma,
/// t < a, non-positive weight, alpha outside [0, 1), ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The result does not fit in a double.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An infinite series did not reach its truncation criterion within the cap,
/// or its terms provably do not decay.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A tabulated intermediate function is not resolved finely enough.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// Derivative values at the base point cannot be produced by the requested source.
class DerivativeUnavailableError : public Error {
 public:
  using Error::Error;
};

}  // namespace pfc
