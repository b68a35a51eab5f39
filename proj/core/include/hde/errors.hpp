#pragma once

#include <stdexcept>
#include <string>

namespace hde {

/// Base class for all domain errors raised by the library. The CLI maps
/// these to exit code 1; ParseError (usage/config) maps to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown model name requested from the registry.
class RegistryError : public Error {
 public:
  using Error::Error;
};

/// Sampling-rate exponent outside the CLT regime (gamma must be in (0,1/2)
/// complement, i.e. h = n^-gamma with gamma in (0.5, 1)).
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// A simulated path left the representable range (non-finite state).
class SimulationBlowupError : public Error {
 public:
  using Error::Error;
};

/// Too few indicator-active pairs to evaluate a contrast or to estimate.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// The requested operation needs an invariant density the model lacks.
class UnsupportedModelError : public Error {
 public:
  using Error::Error;
};

/// Numeric failure: non-finite objective value, quadrature non-convergence,
/// singular information matrix where a nonsingular one is required.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A Monte Carlo experiment exceeded the tolerated failure rate.
class ExperimentError : public Error {
 public:
  using Error::Error;
};

/// Malformed config file, CSV input, or CLI usage.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hde
