#include "isobound/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <set>
#include <string>

#include "isobound/errors.hpp"

namespace isobound {

namespace {

// Relative tolerance (against the bounding-box diagonal) for deciding that a
// point sits on the boundary.
constexpr double kBoundaryTol = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool condition, const std::string& message) {
  if (!condition) throw InputError(message);
}

bool all_finite(std::span<const double> values) {
  return std::all_of(values.begin(), values.end(),
                     [](double v) { return std::isfinite(v); });
}

double cross(const Vertex2& o, const Vertex2& a, const Vertex2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double signed_area(const std::vector<Vertex2>& v) {
  double twice = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % v.size()];
    twice += p[0] * q[1] - q[0] * p[1];
  }
  return 0.5 * twice;
}

bool on_segment(const Vertex2& p, const Vertex2& a, const Vertex2& b,
                double tol) {
  const double dx = b[0] - a[0];
  const double dy = b[1] - a[1];
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double ex = a[0] + t * dx - p[0];
  const double ey = a[1] + t * dy - p[1];
  return ex * ex + ey * ey <= tol * tol;
}

int orientation(const Vertex2& a, const Vertex2& b, const Vertex2& c) {
  const double v = cross(a, b, c);
  return (v > 0) - (v < 0);
}

bool segments_intersect(const Vertex2& p1, const Vertex2& p2, const Vertex2& q1,
                        const Vertex2& q2) {
  const int o1 = orientation(p1, p2, q1);
  const int o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1);
  const int o4 = orientation(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  auto within = [](const Vertex2& a, const Vertex2& b, const Vertex2& c) {
    return std::min(a[0], b[0]) <= c[0] && c[0] <= std::max(a[0], b[0]) &&
           std::min(a[1], b[1]) <= c[1] && c[1] <= std::max(a[1], b[1]);
  };
  if (o1 == 0 && within(p1, p2, q1)) return true;
  if (o2 == 0 && within(p1, p2, q2)) return true;
  if (o3 == 0 && within(q1, q2, p1)) return true;
  if (o4 == 0 && within(q1, q2, p2)) return true;
  return false;
}

void validate_polygon(const std::vector<Vertex2>& v) {
  require(v.size() >= 3, "polygon needs at least 3 vertices");
  for (const auto& p : v)
    require(std::isfinite(p[0]) && std::isfinite(p[1]),
            "polygon vertex is not finite");
  require(signed_area(v) > 0,
          "polygon vertices must be in counterclockwise order");
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % n];
    require(a != b, "polygon has repeated consecutive vertices");
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      const auto& c = v[j];
      const auto& d = v[(j + 1) % n];
      if (adjacent) {
        // Adjacent edges share one vertex; they may not fold back onto
        // each other.
        const Vertex2& shared = (j == i + 1) ? b : a;
        const Vertex2& other_i = (j == i + 1) ? a : b;
        const Vertex2& other_j = (j == i + 1) ? d : c;
        if (orientation(shared, other_i, other_j) == 0) {
          const double dot = (other_i[0] - shared[0]) * (other_j[0] - shared[0]) +
                             (other_i[1] - shared[1]) * (other_j[1] - shared[1]);
          require(dot <= 0, "polygon has overlapping adjacent edges");
        }
        continue;
      }
      require(!segments_intersect(a, b, c, d), "polygon is not simple");
    }
  }
}

std::size_t product(const std::vector<std::size_t>& shape) {
  std::size_t p = 1;
  for (auto s : shape) p *= s;
  return p;
}

// Decomposes a flat row-major index into a multi-index.
std::array<std::size_t, 3> unflatten(std::size_t flat,
                                     const std::vector<std::size_t>& shape) {
  std::array<std::size_t, 3> idx{};
  for (std::size_t d = shape.size(); d-- > 0;) {
    idx[d] = flat % shape[d];
    flat /= shape[d];
  }
  return idx;
}

std::size_t flatten(const std::array<std::size_t, 3>& idx,
                    const std::vector<std::size_t>& shape) {
  std::size_t flat = 0;
  for (std::size_t d = 0; d < shape.size(); ++d) flat = flat * shape[d] + idx[d];
  return flat;
}

// Cells touched by a point along one axis: one cell for points strictly
// inside a cell, two for points on a cell face. Out-of-range cells are kept as
// -1 so the caller can treat them as empty.
std::vector<long> touched_cells(double t, std::size_t extent) {
  const double r = std::round(t);
  std::vector<long> out;
  if (std::abs(t - r) <= kBoundaryTol * std::max(1.0, std::abs(t))) {
    const long k = static_cast<long>(r);
    out = {k - 1, k};
  } else {
    out = {static_cast<long>(std::floor(t))};
  }
  for (auto& k : out)
    if (k < 0 || k >= static_cast<long>(extent)) k = -1;
  return out;
}

// Evaluates the raster predicate: closed membership needs any touched cell
// filled, open membership needs all of them filled.
bool raster_membership(const RasterMaskShape& m, std::span<const double> p,
                       bool interior) {
  const std::size_t dim = m.shape.size();
  std::array<std::vector<long>, 3> per_axis;
  for (std::size_t d = 0; d < dim; ++d) {
    const double t = (p[d] - m.origin[d]) / m.cell_size;
    per_axis[d] = touched_cells(t, m.shape[d]);
  }
  for (std::size_t d = dim; d < 3; ++d) per_axis[d] = {0};

  bool any = false;
  bool all = true;
  for (long i : per_axis[0])
    for (long j : per_axis[1])
      for (long k : per_axis[2]) {
        bool filled = false;
        if (i >= 0 && j >= 0 && k >= 0) {
          const std::array<std::size_t, 3> idx{static_cast<std::size_t>(i),
                                               static_cast<std::size_t>(j),
                                               static_cast<std::size_t>(k)};
          filled = m.cells[flatten(idx, m.shape)] != 0;
        }
        any = any || filled;
        all = all && filled;
      }
  return interior ? all : any;
}

// 0 inside, 1 on the boundary, 2 outside.
enum class Side { inside, boundary, outside };

Side classify(const Domain& domain, std::span<const double> p) {
  if (p.size() != static_cast<std::size_t>(domain.dim()))
    throw InputError("point has " + std::to_string(p.size()) +
                     " coordinates, domain has dimension " +
                     std::to_string(domain.dim()));
  const double tol = kBoundaryTol;
  auto compare = [tol](double value, double limit) {
    // value vs limit for quadratic forms normalized to 1.
    if (value < limit * (1 - tol)) return Side::inside;
    if (value <= limit * (1 + tol)) return Side::boundary;
    return Side::outside;
  };
  return std::visit(
      Overloaded{
          [&](const IntervalShape& s) {
            const double scale = tol * (s.b - s.a);
            if (p[0] < s.a - scale || p[0] > s.b + scale) return Side::outside;
            if (p[0] <= s.a + scale || p[0] >= s.b - scale) return Side::boundary;
            return Side::inside;
          },
          [&](const BoxShape& s) {
            bool on_face = false;
            for (std::size_t d = 0; d < p.size(); ++d) {
              const double scale = tol * (s.upper[d] - s.lower[d]);
              if (p[d] < s.lower[d] - scale || p[d] > s.upper[d] + scale)
                return Side::outside;
              if (p[d] <= s.lower[d] + scale || p[d] >= s.upper[d] - scale)
                on_face = true;
            }
            return on_face ? Side::boundary : Side::inside;
          },
          [&](const BallShape& s) {
            double r2 = 0.0;
            for (std::size_t d = 0; d < p.size(); ++d) {
              const double x = p[d] - s.center[d];
              r2 += x * x;
            }
            return compare(r2, s.radius * s.radius);
          },
          [&](const EllipseShape& s) {
            double q = 0.0;
            for (std::size_t d = 0; d < p.size(); ++d) {
              const double x = (p[d] - s.center[d]) / s.half_axes[d];
              q += x * x;
            }
            return compare(q, 1.0);
          },
          [&](const PolygonShape& s) {
            const Vertex2 q{p[0], p[1]};
            const double edge_tol = tol * domain.bounding_box().diagonal();
            const auto& v = s.vertices;
            for (std::size_t i = 0; i < v.size(); ++i)
              if (on_segment(q, v[i], v[(i + 1) % v.size()], edge_tol))
                return Side::boundary;
            bool inside = false;
            for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
              if ((v[i][1] > q[1]) != (v[j][1] > q[1])) {
                const double x_cross = v[j][0] + (q[1] - v[j][1]) *
                                                     (v[i][0] - v[j][0]) /
                                                     (v[i][1] - v[j][1]);
                if (q[0] < x_cross) inside = !inside;
              }
            }
            return inside ? Side::inside : Side::outside;
          },
          [&](const RasterMaskShape& s) {
            if (raster_membership(s, p, true)) return Side::inside;
            if (raster_membership(s, p, false)) return Side::boundary;
            return Side::outside;
          },
      },
      domain.shape());
}

// Face-neighbor connected components over a boolean lattice.
std::size_t count_components(const std::vector<std::uint8_t>& on,
                             const std::vector<std::size_t>& shape) {
  std::vector<std::uint8_t> seen(on.size(), 0);
  std::size_t components = 0;
  for (std::size_t start = 0; start < on.size(); ++start) {
    if (!on[start] || seen[start]) continue;
    ++components;
    std::queue<std::size_t> frontier;
    frontier.push(start);
    seen[start] = 1;
    while (!frontier.empty()) {
      const std::size_t cur = frontier.front();
      frontier.pop();
      const auto idx = unflatten(cur, shape);
      for (std::size_t d = 0; d < shape.size(); ++d) {
        for (int step : {-1, 1}) {
          auto nb = idx;
          if (step < 0 && nb[d] == 0) continue;
          if (step > 0 && nb[d] + 1 == shape[d]) continue;
          nb[d] = step < 0 ? nb[d] - 1 : nb[d] + 1;
          const std::size_t flat = flatten(nb, shape);
          if (on[flat] && !seen[flat]) {
            seen[flat] = 1;
            frontier.push(flat);
          }
        }
      }
    }
  }
  return components;
}

DomainMetrics raster_metrics(const RasterMaskShape& m) {
  const std::size_t dim = m.shape.size();
  const double c = m.cell_size;
  const double cell_volume = std::pow(c, static_cast<double>(dim));

  std::size_t filled = 0;
  std::size_t boundary_cells = 0;
  std::size_t exposed_faces = 0;
  std::set<std::array<long, 3>> corners;
  for (std::size_t flat = 0; flat < m.cells.size(); ++flat) {
    if (!m.cells[flat]) continue;
    ++filled;
    const auto idx = unflatten(flat, m.shape);
    std::size_t exposed = 0;
    for (std::size_t d = 0; d < dim; ++d) {
      for (int step : {-1, 1}) {
        bool neighbor_filled = false;
        if (!(step < 0 && idx[d] == 0) && !(step > 0 && idx[d] + 1 == m.shape[d])) {
          auto nb = idx;
          nb[d] = step < 0 ? nb[d] - 1 : nb[d] + 1;
          neighbor_filled = m.cells[flatten(nb, m.shape)] != 0;
        }
        if (!neighbor_filled) ++exposed;
      }
    }
    exposed_faces += exposed;
    if (exposed == 0) continue;
    ++boundary_cells;
    for (unsigned bits = 0; bits < (1u << dim); ++bits) {
      std::array<long, 3> corner{0, 0, 0};
      for (std::size_t d = 0; d < dim; ++d)
        corner[d] = static_cast<long>(idx[d]) + ((bits >> d) & 1u);
      corners.insert(corner);
    }
  }

  // The diameter of a union of boxes is attained between two box corners on
  // the outer boundary.
  const std::vector<std::array<long, 3>> pts(corners.begin(), corners.end());
  long best = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      long d2 = 0;
      for (std::size_t d = 0; d < 3; ++d) {
        const long x = pts[i][d] - pts[j][d];
        d2 += x * x;
      }
      best = std::max(best, d2);
    }

  DomainMetrics out;
  out.dim = static_cast<int>(dim);
  out.volume = {static_cast<double>(filled) * cell_volume, Exactness::estimated,
                static_cast<double>(boundary_cells) * cell_volume};
  out.diameter = {std::sqrt(static_cast<double>(best)) * c,
                  Exactness::closed_form, 0.0};
  if (dim == 2)
    out.perimeter = MetricValue{static_cast<double>(exposed_faces) * c,
                                Exactness::closed_form, 0.0};

  out.connected = count_components(m.cells, m.shape) == 1;
  if (dim == 3) {
    out.simply_connected.reset();
  } else {
    // Pad with one empty layer so every hole shows up as an extra empty
    // component that does not touch the outside.
    std::vector<std::size_t> padded_shape = m.shape;
    for (auto& s : padded_shape) s += 2;
    std::vector<std::uint8_t> empty(product(padded_shape), 1);
    for (std::size_t flat = 0; flat < m.cells.size(); ++flat) {
      auto idx = unflatten(flat, m.shape);
      for (std::size_t d = 0; d < dim; ++d) ++idx[d];
      empty[flatten(idx, padded_shape)] = m.cells[flat] ? 0 : 1;
    }
    out.simply_connected =
        out.connected && count_components(empty, padded_shape) == 1;
  }
  return out;
}

}  // namespace

std::string_view to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::interval: return "interval";
    case DomainKind::box: return "box";
    case DomainKind::ball: return "ball";
    case DomainKind::ellipse: return "ellipse";
    case DomainKind::polygon: return "polygon";
    case DomainKind::raster_mask: return "raster-mask";
  }
  return "unknown";
}

DomainKind parse_domain_kind(std::string_view name) {
  for (auto kind : {DomainKind::interval, DomainKind::box, DomainKind::ball,
                    DomainKind::ellipse, DomainKind::polygon,
                    DomainKind::raster_mask})
    if (to_string(kind) == name) return kind;
  throw InputError("unknown domain kind \"" + std::string(name) + "\"");
}

std::string_view to_string(Exactness exactness) {
  return exactness == Exactness::closed_form ? "closed-form" : "estimated";
}

double BoundingBox::shortest_edge() const {
  double e = edge(0);
  for (std::size_t d = 1; d < lower.size(); ++d) e = std::min(e, edge(d));
  return e;
}

double BoundingBox::diagonal() const {
  double s = 0.0;
  for (std::size_t d = 0; d < lower.size(); ++d) s += edge(d) * edge(d);
  return std::sqrt(s);
}

double BoundingBox::volume() const {
  double v = 1.0;
  for (std::size_t d = 0; d < lower.size(); ++d) v *= edge(d);
  return v;
}

Domain::Domain(int dim, Shape shape, BoundingBox bbox)
    : dim_(dim), shape_(std::move(shape)), bbox_(std::move(bbox)) {}

DomainKind Domain::kind() const {
  return static_cast<DomainKind>(shape_.index());
}

Domain Domain::interval(double a, double b) {
  require(std::isfinite(a) && std::isfinite(b), "interval endpoints must be finite");
  require(a < b, "interval needs a < b");
  return Domain(1, IntervalShape{a, b}, BoundingBox{{a}, {b}});
}

Domain Domain::box(std::vector<double> lower, std::vector<double> upper) {
  require(!lower.empty() && lower.size() <= 3, "box dimension must be 1, 2 or 3");
  require(lower.size() == upper.size(), "box lower/upper have different lengths");
  require(all_finite(lower) && all_finite(upper), "box corners must be finite");
  for (std::size_t d = 0; d < lower.size(); ++d)
    require(lower[d] < upper[d], "box needs lower < upper on every axis");
  const int dim = static_cast<int>(lower.size());
  BoundingBox bbox{lower, upper};
  return Domain(dim, BoxShape{std::move(lower), std::move(upper)},
                std::move(bbox));
}

Domain Domain::ball(int dim, double radius, std::vector<double> center) {
  require(dim >= 1 && dim <= 3, "ball dimension must be 1, 2 or 3");
  require(std::isfinite(radius) && radius > 0, "ball radius must be positive");
  if (center.empty()) center.assign(static_cast<std::size_t>(dim), 0.0);
  require(center.size() == static_cast<std::size_t>(dim),
          "ball center length does not match dimension");
  require(all_finite(center), "ball center must be finite");
  BoundingBox bbox;
  for (double c : center) {
    bbox.lower.push_back(c - radius);
    bbox.upper.push_back(c + radius);
  }
  return Domain(dim, BallShape{std::move(center), radius}, std::move(bbox));
}

Domain Domain::ellipse(std::vector<double> half_axes, std::vector<double> center) {
  require(!half_axes.empty() && half_axes.size() <= 3,
          "ellipse dimension must be 1, 2 or 3");
  for (double a : half_axes)
    require(std::isfinite(a) && a > 0, "ellipse half-axes must be positive");
  if (center.empty()) center.assign(half_axes.size(), 0.0);
  require(center.size() == half_axes.size(),
          "ellipse center length does not match dimension");
  require(all_finite(center), "ellipse center must be finite");
  BoundingBox bbox;
  for (std::size_t d = 0; d < center.size(); ++d) {
    bbox.lower.push_back(center[d] - half_axes[d]);
    bbox.upper.push_back(center[d] + half_axes[d]);
  }
  const int dim = static_cast<int>(half_axes.size());
  return Domain(dim, EllipseShape{std::move(center), std::move(half_axes)},
                std::move(bbox));
}

Domain Domain::polygon(std::vector<Vertex2> vertices) {
  validate_polygon(vertices);
  BoundingBox bbox{{vertices[0][0], vertices[0][1]},
                   {vertices[0][0], vertices[0][1]}};
  for (const auto& v : vertices)
    for (std::size_t d = 0; d < 2; ++d) {
      bbox.lower[d] = std::min(bbox.lower[d], v[d]);
      bbox.upper[d] = std::max(bbox.upper[d], v[d]);
    }
  return Domain(2, PolygonShape{std::move(vertices)}, std::move(bbox));
}

Domain Domain::raster_mask(RasterMaskShape mask) {
  const std::size_t dim = mask.shape.size();
  require(dim >= 1 && dim <= 3, "raster mask dimension must be 1, 2 or 3");
  for (auto s : mask.shape) require(s > 0, "raster mask extents must be positive");
  require(mask.cells.size() == product(mask.shape),
          "raster mask cell count does not match its shape");
  require(std::isfinite(mask.cell_size) && mask.cell_size > 0,
          "raster mask cell_size must be positive");
  if (mask.origin.empty()) mask.origin.assign(dim, 0.0);
  require(mask.origin.size() == dim, "raster mask origin length does not match dimension");
  require(all_finite(mask.origin), "raster mask origin must be finite");
  require(std::any_of(mask.cells.begin(), mask.cells.end(),
                      [](std::uint8_t c) { return c != 0; }),
          "raster mask has no filled cells");
  for (auto& c : mask.cells) c = c ? 1 : 0;

  // Tight box around the filled cells.
  std::vector<std::size_t> lo(dim, SIZE_MAX), hi(dim, 0);
  for (std::size_t flat = 0; flat < mask.cells.size(); ++flat) {
    if (!mask.cells[flat]) continue;
    const auto idx = unflatten(flat, mask.shape);
    for (std::size_t d = 0; d < dim; ++d) {
      lo[d] = std::min(lo[d], idx[d]);
      hi[d] = std::max(hi[d], idx[d] + 1);
    }
  }
  BoundingBox bbox;
  for (std::size_t d = 0; d < dim; ++d) {
    bbox.lower.push_back(mask.origin[d] + static_cast<double>(lo[d]) * mask.cell_size);
    bbox.upper.push_back(mask.origin[d] + static_cast<double>(hi[d]) * mask.cell_size);
  }
  return Domain(static_cast<int>(dim), std::move(mask), std::move(bbox));
}

bool contains(const Domain& domain, std::span<const double> point) {
  return classify(domain, point) != Side::outside;
}

bool contains_interior(const Domain& domain, std::span<const double> point) {
  return classify(domain, point) == Side::inside;
}

std::optional<double> DomainMetrics::isoperimetric_deficit() const {
  if (!perimeter) return std::nullopt;
  const double L = perimeter->value;
  return L * L - 4.0 * std::numbers::pi * area();
}

DomainMetrics metrics(const Domain& domain) {
  const int n = domain.dim();
  auto exact = [](double v) { return MetricValue{v, Exactness::closed_form, 0.0}; };
  DomainMetrics out;
  out.dim = n;
  std::visit(
      Overloaded{
          [&](const IntervalShape& s) {
            out.volume = exact(s.b - s.a);
            out.diameter = exact(s.b - s.a);
          },
          [&](const BoxShape& s) {
            double vol = 1.0, diag2 = 0.0, edges = 0.0;
            for (std::size_t d = 0; d < s.lower.size(); ++d) {
              const double e = s.upper[d] - s.lower[d];
              vol *= e;
              diag2 += e * e;
              edges += e;
            }
            out.volume = exact(vol);
            out.diameter = exact(std::sqrt(diag2));
            if (n == 2) out.perimeter = exact(2.0 * edges);
          },
          [&](const BallShape& s) {
            out.volume = exact(unit_ball_volume(n) * std::pow(s.radius, n));
            out.diameter = exact(2.0 * s.radius);
            if (n == 2) out.perimeter = exact(2.0 * std::numbers::pi * s.radius);
          },
          [&](const EllipseShape& s) {
            double vol = unit_ball_volume(n);
            for (double a : s.half_axes) vol *= a;
            const double major =
                *std::max_element(s.half_axes.begin(), s.half_axes.end());
            out.volume = exact(vol);
            out.diameter = exact(2.0 * major);
            if (n == 2) {
              const double minor =
                  *std::min_element(s.half_axes.begin(), s.half_axes.end());
              const double k = std::sqrt(1.0 - (minor * minor) / (major * major));
              out.perimeter = exact(4.0 * major * std::comp_ellint_2(k));
            }
          },
          [&](const PolygonShape& s) {
            const auto& v = s.vertices;
            double perim = 0.0, diam2 = 0.0;
            for (std::size_t i = 0; i < v.size(); ++i) {
              const auto& a = v[i];
              const auto& b = v[(i + 1) % v.size()];
              perim += std::hypot(b[0] - a[0], b[1] - a[1]);
              for (std::size_t j = i + 1; j < v.size(); ++j) {
                const double dx = v[j][0] - a[0];
                const double dy = v[j][1] - a[1];
                diam2 = std::max(diam2, dx * dx + dy * dy);
              }
            }
            out.volume = exact(signed_area(v));
            out.diameter = exact(std::sqrt(diam2));
            out.perimeter = exact(perim);
          },
          [&](const RasterMaskShape& s) { out = raster_metrics(s); },
      },
      domain.shape());
  return out;
}

double gamma_half_integer(double x) {
  const double twice = 2.0 * x;
  if (!(x > 0) || twice != std::round(twice) || twice > 340)
    throw InputError("gamma_half_integer needs a positive multiple of 1/2");
  const long k = std::lround(twice);
  // Gamma(x) = (x-1) Gamma(x-1), ending at Gamma(1) = 1 or Gamma(1/2) = sqrt(pi).
  double value = (k % 2 == 0) ? 1.0 : std::sqrt(std::numbers::pi);
  for (double y = (k % 2 == 0) ? 1.0 : 0.5; y < x; y += 1.0) value *= y;
  return value;
}

double unit_ball_volume(int n) {
  if (n < 1) throw InputError("unit_ball_volume needs n >= 1");
  return std::pow(std::numbers::pi, 0.5 * n) / gamma_half_integer(0.5 * n + 1.0);
}

}  // namespace isobound
