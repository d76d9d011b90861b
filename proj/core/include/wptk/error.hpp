#pragma once

#include <stdexcept>
#include <string>

namespace wptk {

/// Base of every exception thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid construction parameters (grids, thresholds, schema bounds).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation (e.g. lambda < 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operands live on incompatible grids.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A requested scale or frequency exceeds what the grid can resolve.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// An object lacks a capability the operation needs (derivative order, closed form).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Analytic-only input routed to a sampled path, or a pair without a closed form.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A classical trajectory left the region where the potential is finite.
class TrajectoryEscape : public Error {
 public:
  using Error::Error;
};

/// Operation invoked in a mode that does not apply to its inputs.
class ModeError : public Error {
 public:
  using Error::Error;
};

}  // namespace wptk
