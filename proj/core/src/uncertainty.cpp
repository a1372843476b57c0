#include "isobound/uncertainty.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "isobound/errors.hpp"
#include "isobound/specfun.hpp"

namespace isobound {

namespace {

void check_constants(const PhysicalConstants& consts) {
  if (!(consts.hbar > 0) || !std::isfinite(consts.hbar))
    throw InputError("hbar must be positive");
}

void check_field(const Grid& grid, const WaveField& field) {
  if (field.size() != grid.point_count())
    throw InputError("wave field length does not match the grid");
}

void check_dimension(int n) {
  if (n < 1 || n > 3) throw InputError("dimension must be 1, 2 or 3");
}

}  // namespace

double momentum_stddev(const OperatorMatrix& matrix, const WaveField& field,
                       const PhysicalConstants& consts) {
  check_constants(consts);
  if (field.size() != matrix.size())
    throw InputError("wave field length does not match the operator");
  if (!(field.norm_squared() > 0)) throw InputError("momentum spread of a zero field");
  if (!field.is_normalized())
    throw InputError("momentum spread needs a normalized field (h^n * |psi|^2 = 1)");
  return consts.hbar * std::sqrt(field.weight() * matrix.quadratic_form(field.values()));
}

std::vector<double> mean_momentum(const Grid& grid, const WaveField& field,
                                  const PhysicalConstants& consts) {
  check_constants(consts);
  check_field(grid, field);
  const auto psi = field.values();
  const double scale = consts.hbar * field.weight() / (2.0 * grid.spacing());
  std::vector<double> out(static_cast<std::size_t>(grid.dim()), 0.0);
  for (int axis = 0; axis < grid.dim(); ++axis) {
    double forward = 0.0, backward = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
      if (auto j = grid.neighbor(i, axis, +1)) forward += psi[i] * psi[*j];
      if (auto j = grid.neighbor(i, axis, -1)) backward += psi[i] * psi[*j];
    }
    out[static_cast<std::size_t>(axis)] = scale * (forward - backward);
  }
  return out;
}

double position_stddev(const Grid& grid, const WaveField& field) {
  check_field(grid, field);
  if (!field.is_normalized())
    throw InputError("position spread needs a normalized field (h^n * |psi|^2 = 1)");
  const auto psi = field.values();
  const double w = field.weight();
  std::array<double, 3> mean{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const auto x = grid.coordinates(i);
    for (int d = 0; d < grid.dim(); ++d) mean[d] += w * psi[i] * psi[i] * x[d];
  }
  double variance = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const auto x = grid.coordinates(i);
    double r2 = 0.0;
    for (int d = 0; d < grid.dim(); ++d) r2 += (x[d] - mean[d]) * (x[d] - mean[d]);
    variance += w * psi[i] * psi[i] * r2;
  }
  return std::sqrt(variance);
}

double bessel_order_for_dimension(int n) {
  check_dimension(n);
  return 0.5 * n - 1.0;
}

double ball_bessel_zero(int n) { return first_zero(bessel_order_for_dimension(n)).value; }

double diameter_bound_constant(int n) { return 2.0 * ball_bessel_zero(n); }

double krahn_lower_bound(double volume, int n) {
  check_dimension(n);
  if (!(volume > 0)) throw InputError("domain volume must be positive");
  const double j = ball_bessel_zero(n);
  return std::pow(unit_ball_volume(n) / volume, 2.0 / n) * j * j;
}

double krahn_ratio(double lambda1, const DomainMetrics& metrics, int n) {
  if (!(lambda1 > 0)) throw InputError("lambda1 must be positive");
  return lambda1 / krahn_lower_bound(metrics.volume.value, n);
}

bool UncertaintyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.pass; });
}

UncertaintyReport certify_bounds(const Domain& domain, const ExtrapolatedEigenvalue& lambda1,
                                 const Grid& grid, const OperatorMatrix& matrix,
                                 double lambda1_discrete, const WaveField& field,
                                 const PhysicalConstants& consts,
                                 const CertifyOptions& options) {
  check_constants(consts);
  check_field(grid, field);
  if (grid.dim() != domain.dim() || matrix.size() != grid.point_count())
    throw InputError("domain, grid and operator are inconsistent");
  if (!(lambda1.value > 0) || !(lambda1_discrete > 0))
    throw InputError("eigenvalues must be positive");

  const int n = domain.dim();
  UncertaintyReport r;
  r.kind = domain.kind();
  r.dim = n;
  r.hbar = consts.hbar;
  r.lambda1 = lambda1.value;
  r.lambda1_error = lambda1.error;
  r.lambda1_discrete = lambda1_discrete;
  r.metrics = metrics(domain);
  r.bessel_zero = ball_bessel_zero(n);

  r.sigma_p = momentum_stddev(matrix, field, consts);
  r.sigma_p_continuum = r.sigma_p * std::sqrt(lambda1.value / lambda1_discrete);
  r.mean_p = mean_momentum(grid, field, consts);
  if (options.include_position_spread) r.sigma_x = position_stddev(grid, field);

  const double d = r.metrics.diameter.value;
  r.krahn_ratio = krahn_ratio(lambda1.value, r.metrics, n);
  r.diameter_product = r.sigma_p_continuum * d / consts.hbar;
  r.tolerance_band =
      kToleranceBandFactor * std::max(std::abs(lambda1.relative_error()), options.solver_tol);

  r.margins.rayleigh = r.sigma_p / (consts.hbar * std::sqrt(lambda1_discrete)) - 1.0;
  r.margins.krahn = r.krahn_ratio - 1.0;
  r.margins.diameter = r.diameter_product / (2.0 * r.bessel_zero) - 1.0;
  if (n == 1) r.margins.interval = r.diameter_product / std::numbers::pi - 1.0;
  if (r.sigma_x) r.margins.kennard = r.sigma_p_continuum * *r.sigma_x / (0.5 * consts.hbar) - 1.0;

  const double equality_tol = std::max(r.tolerance_band, kEqualityTolerance);
  const double rayleigh_tol = kToleranceBandFactor * options.solver_tol;
  r.equality_flags.rayleigh = std::abs(r.margins.rayleigh) <= rayleigh_tol;
  r.equality_flags.krahn = std::abs(r.margins.krahn) <= equality_tol;
  r.equality_flags.diameter = std::abs(r.margins.diameter) <= equality_tol;

  auto add = [&r](std::string name, double margin, double tol, bool equality) {
    r.checks.push_back({std::move(name), margin, tol, margin >= -tol, equality});
  };
  add("rayleigh", r.margins.rayleigh, rayleigh_tol, r.equality_flags.rayleigh);
  add("krahn", r.margins.krahn, r.tolerance_band, r.equality_flags.krahn);
  add("diameter", r.margins.diameter, r.tolerance_band, r.equality_flags.diameter);
  if (r.margins.interval)
    add("interval", *r.margins.interval, r.tolerance_band, r.equality_flags.diameter);
  if (r.margins.kennard) add("kennard", *r.margins.kennard, r.tolerance_band, false);

  const double mean_limit = 1e-10 * consts.hbar / grid.spacing();
  double worst_mean = 0.0;
  for (double p : r.mean_p) worst_mean = std::max(worst_mean, std::abs(p));
  r.checks.push_back({"mean_p", -worst_mean / mean_limit + 1.0, 0.0, worst_mean <= mean_limit,
                      false});
  return r;
}

}  // namespace isobound
