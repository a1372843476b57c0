#include "isobound/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>
#include <utility>

#include "isobound/errors.hpp"
#include "isobound/format.hpp"

namespace isobound {

double Grid::cell_volume() const {
  return std::pow(spacing_, static_cast<double>(dim_));
}

std::array<std::size_t, 3> Grid::lattice_index(std::size_t i) const {
  std::array<std::size_t, 3> idx{0, 0, 0};
  std::size_t flat = interior_.at(i);
  for (int d = dim_ - 1; d >= 0; --d) {
    idx[d] = flat % shape_[d];
    flat /= shape_[d];
  }
  return idx;
}

std::array<double, 3> Grid::coordinates(std::size_t i) const {
  const auto idx = lattice_index(i);
  std::array<double, 3> x{0.0, 0.0, 0.0};
  for (int d = 0; d < dim_; ++d)
    x[d] = origin_[d] + static_cast<double>(idx[d]) * spacing_;
  return x;
}

std::optional<std::size_t> Grid::index_of(
    const std::array<std::size_t, 3>& lattice) const {
  std::size_t flat = 0;
  for (int d = 0; d < dim_; ++d) {
    if (lattice[d] >= shape_[d]) return std::nullopt;
    flat += lattice[d] * strides_[d];
  }
  const auto id = lattice_to_index_[flat];
  if (id < 0) return std::nullopt;
  return static_cast<std::size_t>(id);
}

std::optional<std::size_t> Grid::neighbor(std::size_t i, int axis, int step) const {
  auto idx = lattice_index(i);
  if (step < 0) {
    if (idx[axis] == 0) return std::nullopt;
    --idx[axis];
  } else {
    ++idx[axis];
  }
  return index_of(idx);
}

Grid build_grid(const Domain& domain, double h, std::size_t max_points) {
  if (!(h > 0) || !std::isfinite(h))
    throw InputError("grid spacing must be positive, got " + format_real(h));
  const auto& bbox = domain.bounding_box();
  if (!(h < 0.5 * bbox.shortest_edge()))
    throw InputError("grid spacing " + format_real(h) +
                     " must be below half the shortest bounding-box edge (" +
                     format_real(0.5 * bbox.shortest_edge()) + ")");

  Grid g;
  g.dim_ = domain.dim();
  g.spacing_ = h;
  g.origin_ = bbox.lower;
  g.shape_.resize(g.dim_);
  double lattice_size = 1.0;
  for (int d = 0; d < g.dim_; ++d) {
    g.shape_[d] = static_cast<std::size_t>(std::floor(bbox.edge(d) / h + 1e-9)) + 1;
    lattice_size *= static_cast<double>(g.shape_[d]);
  }
  if (lattice_size > static_cast<double>(max_points))
    throw InputError("grid at h = " + format_real(h) + " needs " +
                     format_real(lattice_size) + " lattice points, above the cap of " +
                     std::to_string(max_points));

  g.strides_.assign(g.dim_, 1);
  for (int d = g.dim_ - 2; d >= 0; --d) g.strides_[d] = g.strides_[d + 1] * g.shape_[d + 1];

  const auto total = static_cast<std::size_t>(lattice_size);
  g.lattice_to_index_.assign(total, -1);
  std::vector<double> point(g.dim_);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (int d = g.dim_ - 1; d >= 0; --d) {
      point[d] = g.origin_[d] + static_cast<double>(rest % g.shape_[d]) * h;
      rest /= g.shape_[d];
    }
    if (contains_interior(domain, point)) {
      g.lattice_to_index_[flat] = static_cast<std::int64_t>(g.interior_.size());
      g.interior_.push_back(flat);
    }
  }
  if (g.interior_.empty())
    throw InputError("grid at h = " + format_real(h) +
                     " has no interior points; refine the spacing");
  return g;
}

double OperatorMatrix::entry(std::size_t i, std::size_t j) const {
  const auto first = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_.at(i));
  const auto last = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_.at(i + 1));
  const auto it = std::lower_bound(first, last, j);
  if (it == last || *it != j) return 0.0;
  return values_[static_cast<std::size_t>(it - col_idx_.begin())];
}

void OperatorMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  const std::size_t n = size();
  if (x.size() != n || y.size() != n)
    throw InputError("matrix-vector size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
      s += values_[k] * x[col_idx_[k]];
    y[i] = s;
  }
}

std::vector<double> OperatorMatrix::multiply(std::span<const double> x) const {
  std::vector<double> y(size());
  multiply(x, y);
  return y;
}

double OperatorMatrix::quadratic_form(std::span<const double> x) const {
  if (x.size() != size()) throw InputError("quadratic form size mismatch");
  double total = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    double s = 0.0;
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
      s += values_[k] * x[col_idx_[k]];
    total += x[i] * s;
  }
  return total;
}

void OperatorMatrix::write_coordinate(std::ostream& out) const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
      out << i << ' ' << col_idx_[k] << ' ' << format_real(values_[k]) << '\n';
}

OperatorMatrix assemble(const Grid& grid) {
  OperatorMatrix a;
  a.dim_ = grid.dim();
  a.spacing_ = grid.spacing();
  const double h2 = grid.spacing() * grid.spacing();
  const double diag = 2.0 * grid.dim() / h2;
  const double off = -1.0 / h2;
  const std::size_t n = grid.point_count();
  a.row_ptr_.reserve(n + 1);
  a.col_idx_.reserve(n * (2 * grid.dim() + 1));
  a.values_.reserve(n * (2 * grid.dim() + 1));

  std::vector<std::pair<std::size_t, double>> row;
  for (std::size_t i = 0; i < n; ++i) {
    row.clear();
    row.emplace_back(i, diag);
    for (int axis = 0; axis < grid.dim(); ++axis)
      for (int step : {-1, 1})
        if (auto j = grid.neighbor(i, axis, step)) row.emplace_back(*j, off);
    std::sort(row.begin(), row.end());
    for (const auto& [col, val] : row) {
      a.col_idx_.push_back(col);
      a.values_.push_back(val);
    }
    a.row_ptr_.push_back(a.col_idx_.size());
  }
  return a;
}

}  // namespace isobound
