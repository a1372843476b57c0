#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "isobound/geometry.hpp"

namespace isobound {

/// Default cap on lattice points per grid (memory guard).
inline constexpr std::size_t kDefaultMaxGridPoints = 20'000'000;

/// Uniform lattice of spacing h anchored at the bounding-box lower corner,
/// restricted to the lattice points in the open interior of a domain.
/// Interior points are numbered 0..N-1 in lattice (row-major) order.
class Grid {
 public:
  int dim() const { return dim_; }
  double spacing() const { return spacing_; }
  const std::vector<double>& origin() const { return origin_; }
  /// Lattice points per axis, including exterior ones.
  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t point_count() const { return interior_.size(); }
  std::size_t lattice_size() const { return lattice_to_index_.size(); }

  /// h^n, the weight of one grid point in discrete L2 inner products.
  double cell_volume() const;

  /// Lattice multi-index of interior point i (unused axes are zero).
  std::array<std::size_t, 3> lattice_index(std::size_t i) const;
  std::array<double, 3> coordinates(std::size_t i) const;

  /// Interior index of the lattice point at the given multi-index, if any.
  std::optional<std::size_t> index_of(const std::array<std::size_t, 3>& lattice) const;

  /// Interior neighbor of point i one step along `axis` (step = -1 or +1).
  std::optional<std::size_t> neighbor(std::size_t i, int axis, int step) const;

 private:
  friend Grid build_grid(const Domain&, double, std::size_t);

  int dim_ = 1;
  double spacing_ = 0.0;
  std::vector<double> origin_;
  std::vector<std::size_t> shape_;
  std::vector<std::size_t> strides_;
  std::vector<std::int64_t> lattice_to_index_;  // -1 for omitted points
  std::vector<std::size_t> interior_;           // flat lattice index per point
};

/// Rasterizes `domain` at spacing h. A lattice point becomes an unknown iff
/// it lies in the open interior of D; points on or outside the boundary are
/// omitted, which imposes u = 0 there.
///
/// Throws InputError if h is not positive, h >= half the shortest bounding
/// box edge, the lattice would exceed `max_points`, or no point is interior.
Grid build_grid(const Domain& domain, double h,
                std::size_t max_points = kDefaultMaxGridPoints);

/// Discrete -Delta in compressed sparse row form with both symmetric halves
/// stored and columns sorted within each row.
class OperatorMatrix {
 public:
  std::size_t size() const { return row_ptr_.size() - 1; }
  int dim() const { return dim_; }
  double spacing() const { return spacing_; }
  std::size_t nonzeros() const { return values_.size(); }
  std::size_t off_diagonal_count() const { return values_.size() - size(); }

  std::span<const std::size_t> row_ptr() const { return row_ptr_; }
  std::span<const std::size_t> col_idx() const { return col_idx_; }
  std::span<const double> values() const { return values_; }

  /// Stored entry, zero when (i, j) is not in the pattern.
  double entry(std::size_t i, std::size_t j) const;

  /// y = A x. Deterministic: each row is summed in column order.
  void multiply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> multiply(std::span<const double> x) const;

  /// x^T A x, accumulated row by row.
  double quadratic_form(std::span<const double> x) const;

  /// Writes "i j value" lines (0-based, sorted by (i, j), 12 significant
  /// digits).
  void write_coordinate(std::ostream& out) const;

 private:
  friend OperatorMatrix assemble(const Grid&);

  int dim_ = 1;
  double spacing_ = 0.0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::size_t> col_idx_;
  std::vector<double> values_;
};

/// (2n+1)-point stencil: A[i][i] = 2n/h^2, A[i][j] = -1/h^2 for interior
/// axis neighbors. Neighbors outside the interior set are dropped.
OperatorMatrix assemble(const Grid& grid);

}  // namespace isobound
