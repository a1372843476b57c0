#pragma once

#include <stdexcept>
#include <string>

namespace isobound {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad domain parameters, dimension
/// mismatches, grids that come out empty, unsupported orders.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An iterative method ran out of iterations before meeting its tolerance.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, double best_residual);

  /// Smallest relative residual reached before giving up.
  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

}  // namespace isobound
