#include "isobound/errors.hpp"

#include "isobound/format.hpp"

namespace isobound {

SolverError::SolverError(const std::string& what, double best_residual)
    : Error(what + " (best residual " + format_real(best_residual) + ")"),
      best_residual_(best_residual) {}

}  // namespace isobound
