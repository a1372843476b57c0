#pragma once

#include <cstddef>
#include <vector>

namespace isobound::detail {

/// Eigen-decomposition of a small dense symmetric matrix (row-major, n x n)
/// by cyclic Jacobi rotations. Eigenvalues come back ascending; column j of
/// `vectors` (row-major n x n) belongs to eigenvalue j.
struct DenseEigen {
  std::vector<double> values;
  std::vector<double> vectors;
};

DenseEigen jacobi_eigen(std::vector<double> a, std::size_t n);

}  // namespace isobound::detail
