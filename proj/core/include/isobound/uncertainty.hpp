#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isobound/discretize.hpp"
#include "isobound/eigensolve.hpp"
#include "isobound/geometry.hpp"

namespace isobound {

struct PhysicalConstants {
  /// Reduced Planck constant; natural units by default.
  double hbar = 1.0;
};

/// Relative margin below which a bound counts as attained with equality.
inline constexpr double kEqualityTolerance = 1e-2;
/// Bound-check tolerance is this multiple of the relative eigenvalue error.
inline constexpr double kToleranceBandFactor = 5.0;

/// sigma_p = hbar * sqrt(h^n * psi^T A psi) for a normalized real field, so
/// that sigma_p^2 = hbar^2 * rayleigh_quotient(psi). Throws InputError for an
/// unnormalized or zero field.
double momentum_stddev(const OperatorMatrix& matrix, const WaveField& field,
                       const PhysicalConstants& consts = {});

/// Coefficient of -i in <psi| -i hbar d/dx_k |psi> for each axis, with the
/// derivative taken by central differences and psi = 0 off the grid. It is
/// zero for every real field up to roundoff.
std::vector<double> mean_momentum(const Grid& grid, const WaveField& field,
                                  const PhysicalConstants& consts = {});

/// Total position spread sqrt(sum_i h^n psi_i^2 |x_i - xbar|^2) of a
/// normalized field.
double position_stddev(const Grid& grid, const WaveField& field);

/// Bessel order n/2 - 1 whose first zero sets the sharp constants in
/// dimension n.
double bessel_order_for_dimension(int n);

/// j_{n/2-1,1}.
double ball_bessel_zero(int n);

/// 2 * j_{n/2-1,1}: pi, 4.8097..., 2*pi for n = 1, 2, 3.
double diameter_bound_constant(int n);

/// Lowest Dirichlet eigenvalue of the ball with the same volume:
/// (C_n / |D|)^(2/n) * j_{n/2-1,1}^2.
double krahn_lower_bound(double volume, int n);

/// lambda1 / krahn_lower_bound(|D|, n); at least 1, equal to 1 for balls.
double krahn_ratio(double lambda1, const DomainMetrics& metrics, int n);

/// Extrapolated continuum eigenvalue with its absolute error estimate.
struct ExtrapolatedEigenvalue {
  double value = 0.0;
  double error = 0.0;
  double relative_error() const { return error / value; }
};

struct BoundCheck {
  std::string name;
  double margin = 0.0;
  /// PASS iff margin >= -tolerance.
  double tolerance = 0.0;
  bool pass = false;
  bool equality = false;
};

struct BoundMargins {
  /// sigma_p / (hbar sqrt(lambda1_discrete)) - 1.
  double rayleigh = 0.0;
  /// krahn_ratio - 1.
  double krahn = 0.0;
  /// sigma_p_continuum * d / (2 j hbar) - 1.
  double diameter = 0.0;
  /// sigma_p_continuum * d / (pi hbar) - 1, dimension 1 only.
  std::optional<double> interval;
  /// sigma_p_continuum * sigma_x / (hbar / 2) - 1.
  std::optional<double> kennard;
};

struct EqualityFlags {
  bool rayleigh = false;
  bool krahn = false;
  bool diameter = false;
};

struct UncertaintyReport {
  DomainKind kind = DomainKind::interval;
  int dim = 1;
  double hbar = 1.0;
  /// Extrapolated continuum eigenvalue and its error estimate.
  double lambda1 = 0.0;
  double lambda1_error = 0.0;
  /// Lowest eigenvalue of the operator the field lives on.
  double lambda1_discrete = 0.0;
  /// hbar * sqrt(Rayleigh quotient of psi) on the grid.
  double sigma_p = 0.0;
  /// sigma_p rescaled by sqrt(lambda1 / lambda1_discrete), i.e. the field's
  /// momentum spread expressed against the continuum ground state.
  double sigma_p_continuum = 0.0;
  std::optional<double> sigma_x;
  std::vector<double> mean_p;
  DomainMetrics metrics;
  double bessel_zero = 0.0;
  double krahn_ratio = 0.0;
  /// sigma_p_continuum * d / hbar.
  double diameter_product = 0.0;
  double tolerance_band = 0.0;
  BoundMargins margins;
  EqualityFlags equality_flags;
  std::vector<BoundCheck> checks;

  bool all_pass() const;
};

struct CertifyOptions {
  /// Relative tolerance the discrete eigenvalue was solved to.
  double solver_tol = kDefaultEigenTol;
  bool include_position_spread = true;
};

/// Evaluates every bound for `field` on the discretization (grid, matrix)
/// whose lowest eigenvalue is `lambda1_discrete`, against the continuum
/// eigenvalue `lambda1`. Tolerance band: 5 * max(relative error of lambda1,
/// solver_tol).
UncertaintyReport certify_bounds(const Domain& domain, const ExtrapolatedEigenvalue& lambda1,
                                 const Grid& grid, const OperatorMatrix& matrix,
                                 double lambda1_discrete, const WaveField& field,
                                 const PhysicalConstants& consts = {},
                                 const CertifyOptions& options = {});

}  // namespace isobound
