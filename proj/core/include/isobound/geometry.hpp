#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace isobound {

enum class DomainKind { interval, box, ball, ellipse, polygon, raster_mask };

std::string_view to_string(DomainKind kind);

/// Parses the spelling used in domain spec files ("interval", "box", "ball",
/// "ellipse", "polygon", "raster-mask"). Throws InputError on anything else.
DomainKind parse_domain_kind(std::string_view name);

/// Axis-aligned box, one [lower, upper] pair per dimension.
struct BoundingBox {
  std::vector<double> lower;
  std::vector<double> upper;

  double edge(std::size_t axis) const { return upper[axis] - lower[axis]; }
  double shortest_edge() const;
  double diagonal() const;
  double volume() const;

  bool operator==(const BoundingBox&) const = default;
};

struct IntervalShape {
  double a = 0.0;
  double b = 1.0;
  bool operator==(const IntervalShape&) const = default;
};

struct BoxShape {
  std::vector<double> lower;
  std::vector<double> upper;
  bool operator==(const BoxShape&) const = default;
};

struct BallShape {
  std::vector<double> center;
  double radius = 1.0;
  bool operator==(const BallShape&) const = default;
};

/// Ellipse in 2D, ellipsoid in 3D; axes aligned with the coordinate axes.
struct EllipseShape {
  std::vector<double> center;
  std::vector<double> half_axes;
  bool operator==(const EllipseShape&) const = default;
};

using Vertex2 = std::array<double, 2>;

/// Simple polygon, vertices counterclockwise, last vertex not repeated.
struct PolygonShape {
  std::vector<Vertex2> vertices;
  bool operator==(const PolygonShape&) const = default;
};

/// Union of closed axis-aligned cells. `cells` is row-major over `shape`
/// (the last axis varies fastest); cell (i0, i1, ...) covers
/// [origin + i*cell_size, origin + (i+1)*cell_size] along each axis.
struct RasterMaskShape {
  std::vector<std::size_t> shape;
  std::vector<std::uint8_t> cells;
  double cell_size = 1.0;
  std::vector<double> origin;

  std::size_t cell_count() const { return cells.size(); }
  bool operator==(const RasterMaskShape&) const = default;
};

using Shape = std::variant<IntervalShape, BoxShape, BallShape, EllipseShape,
                           PolygonShape, RasterMaskShape>;

/// A compact region D in R^n, n in {1, 2, 3}. Immutable once built; all
/// factories validate their parameters and throw InputError on failure.
class Domain {
 public:
  static Domain interval(double a, double b);
  static Domain box(std::vector<double> lower, std::vector<double> upper);
  /// Ball of the given radius; an empty center means the origin.
  static Domain ball(int dim, double radius, std::vector<double> center = {});
  static Domain ellipse(std::vector<double> half_axes,
                        std::vector<double> center = {});
  static Domain polygon(std::vector<Vertex2> vertices);
  static Domain raster_mask(RasterMaskShape mask);

  DomainKind kind() const;
  int dim() const { return dim_; }
  const Shape& shape() const { return shape_; }
  const BoundingBox& bounding_box() const { return bbox_; }

  bool operator==(const Domain&) const = default;

 private:
  Domain(int dim, Shape shape, BoundingBox bbox);

  int dim_;
  Shape shape_;
  BoundingBox bbox_;
};

/// Closed membership: boundary points report true. Throws InputError when
/// point.size() != domain.dim().
bool contains(const Domain& domain, std::span<const double> point);

/// Open membership: true only for points of D that are not on its boundary.
/// These are the lattice points that carry unknowns after discretization.
bool contains_interior(const Domain& domain, std::span<const double> point);

enum class Exactness { closed_form, estimated };

std::string_view to_string(Exactness exactness);

struct MetricValue {
  double value = 0.0;
  Exactness exactness = Exactness::closed_form;
  /// Absolute error bound; zero for closed-form values.
  double error_bound = 0.0;
};

struct DomainMetrics {
  int dim = 0;
  MetricValue volume;
  MetricValue diameter;
  std::optional<MetricValue> perimeter;  // 2D only
  bool connected = true;
  /// Empty when it cannot be decided (3D raster masks).
  std::optional<bool> simply_connected = true;

  /// Alias of volume for planar domains.
  double area() const { return volume.value; }

  /// L^2 - 4*pi*A when a perimeter is available.
  std::optional<double> isoperimetric_deficit() const;
};

DomainMetrics metrics(const Domain& domain);

/// Gamma at a positive multiple of 1/2, by recursion from Gamma(1/2) =
/// sqrt(pi) and Gamma(1) = 1. Throws InputError for other arguments.
double gamma_half_integer(double x);

/// Volume of the unit ball in R^n: pi^(n/2) / Gamma(n/2 + 1).
double unit_ball_volume(int n);

}  // namespace isobound
