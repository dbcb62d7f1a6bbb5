#pragma once

#include <stdexcept>
#include <string>

namespace swmhd {

/// Base class for every error raised by the solver library.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state with h <= 0 reached an operation that needs a wet node.
class NonPositiveHeight : public SolverError {
 public:
  explicit NonPositiveHeight(double h)
      : SolverError("non-positive water height h = " + std::to_string(h)), height_(h) {}
  NonPositiveHeight(const std::string& what, double h) : SolverError(what), height_(h) {}
  double height() const noexcept { return height_; }

 private:
  double height_;
};

/// Requested EC half-order p or ES order k is not implemented.
class UnsupportedOrder : public SolverError {
 public:
  using SolverError::SolverError;
};

/// The Lax-Friedrichs fallback of the positivity limiter is itself not above
/// the dry threshold, so the limiter cannot produce a positive update.
class InvalidLF : public SolverError {
 public:
  using SolverError::SolverError;
};

/// Bad run configuration (unknown problem, malformed key, ...).
class ConfigError : public SolverError {
 public:
  using SolverError::SolverError;
};

}  // namespace swmhd
