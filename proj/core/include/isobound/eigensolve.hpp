#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "isobound/discretize.hpp"

namespace isobound {

inline constexpr double kDefaultEigenTol = 1e-10;
inline constexpr std::uint64_t kDefaultEigenSeed = 0x1505b0dULL;

/// Smallest eigenpairs of an OperatorMatrix.
struct Spectrum {
  /// Ascending, units 1/length^2.
  std::vector<double> eigenvalues;
  /// Normalized so that weight * <v, v> = 1.
  std::vector<std::vector<double>> eigenvectors;
  /// ||A v - lambda v|| / ||v|| for each pair.
  std::vector<double> residuals;
  /// h^n, the discrete volume element.
  double inner_product_weight = 1.0;
  /// Outer (inverse-iteration) steps taken.
  std::size_t iterations = 0;
  /// Conjugate-gradient steps summed over all inner solves.
  std::size_t inner_iterations = 0;
};

struct EigenOptions {
  std::uint64_t seed = kDefaultEigenSeed;
  /// Extra block vectors carried beyond the k requested.
  std::size_t guard_vectors = 2;
  /// Each inner CG solve stops once its residual has shrunk by this factor
  /// (or reaches 0.1 * tol absolute-relative, whichever comes first).
  double inner_reduction = 1e-1;
  /// 0 selects ceil(50 * sqrt(N)).
  std::size_t max_outer_iterations = 0;
};

/// k smallest eigenpairs of a symmetric positive definite OperatorMatrix by
/// block inverse iteration: each step applies A^{-1} to the block with
/// conjugate-gradient solves, re-orthonormalizes, and performs a
/// Rayleigh-Ritz projection. Pairs whose residual drops below tol * lambda
/// are locked and deflated from the active block.
///
/// Eigenvectors are scaled to unit h^n-weighted norm with a positive
/// component sum. Degenerate eigenvalues yield an arbitrary orthonormal basis
/// of their eigenspace.
///
/// Throws InputError when k is 0 or exceeds N, SolverError when the
/// iteration cap is reached first.
Spectrum smallest_eigenpairs(const OperatorMatrix& matrix, std::size_t k,
                             double tol = kDefaultEigenTol,
                             const EigenOptions& options = {});

/// ||A v - lambda v|| / ||v||.
double eigen_residual(const OperatorMatrix& matrix, double lambda,
                      std::span<const double> v);

/// A real wave function sampled on the interior points of a Grid.
class WaveField {
 public:
  WaveField(std::vector<double> values, double weight);

  /// Rescales `values` so that weight * sum(psi^2) = 1. Throws InputError
  /// for a zero vector.
  static WaveField normalized(std::vector<double> values, double weight);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double weight() const { return weight_; }

  /// weight * sum(psi^2).
  double norm_squared() const;
  /// |weight * sum(psi^2) - 1| <= 1e-10.
  bool is_normalized() const;

 private:
  std::vector<double> values_;
  double weight_;
};

/// Ground state of a spectrum as a normalized WaveField.
WaveField ground_state(const Spectrum& spectrum);

/// (psi^T A psi) / (psi^T psi). Throws InputError for a zero vector or a
/// size mismatch.
double rayleigh_quotient(const OperatorMatrix& matrix, std::span<const double> psi);
double rayleigh_quotient(const OperatorMatrix& matrix, const WaveField& field);

}  // namespace isobound
