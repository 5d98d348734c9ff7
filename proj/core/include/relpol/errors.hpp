#pragma once

#include <stdexcept>
#include <string>

namespace relpol {

/// Base class for every error raised by relpol.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The nuclear charge reaches or exceeds the critical charge, so gamma_kappa
/// is no longer real.
class SupercriticalError : public Error {
 public:
  using Error::Error;
};

/// An infinite series failed to meet its tolerance within the term cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Finite-difference uncertainty propagation failed its curvature check.
class PropagationError : public Error {
 public:
  using Error::Error;
};

}  // namespace relpol
