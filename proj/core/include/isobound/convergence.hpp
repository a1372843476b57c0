#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "isobound/discretize.hpp"
#include "isobound/eigensolve.hpp"
#include "isobound/geometry.hpp"

namespace isobound {

/// Grid, operator and spectrum of the finest refinement level.
struct FinestLevel {
  Grid grid;
  OperatorMatrix matrix;
  Spectrum spectrum;
};

/// Results of a grid-refinement sweep h, h/2, h/4, ...
struct ConvergenceStudy {
  std::vector<double> spacings;
  std::vector<std::size_t> point_counts;
  std::vector<double> lambda1_values;
  /// lambda1(h_i) - lambda1(h_{i+1}); one shorter than spacings.
  std::vector<double> differences;
  /// Richardson extrapolant from levels i and i+1 with the fitted order.
  std::vector<double> extrapolants;
  /// p from lambda1(h) ~ lambda* + C h^p, least squares on log|differences|.
  double observed_order = 0.0;
  /// Order actually used for extrapolation (observed order clamped to
  /// [kMinExtrapolationOrder, kMaxExtrapolationOrder]).
  double extrapolation_order = 0.0;
  double extrapolated = 0.0;
  /// |last extrapolant - previous extrapolant|.
  double error_estimate = 0.0;
  /// False when the lambda1 sequence is not strictly monotone.
  bool monotone = true;
  std::optional<FinestLevel> finest;

  double relative_error() const { return error_estimate / extrapolated; }
};

inline constexpr double kMinExtrapolationOrder = 0.5;
inline constexpr double kMaxExtrapolationOrder = 4.0;
inline constexpr std::size_t kMinRefinementLevels = 3;
inline constexpr std::size_t kDefaultLevels = 4;

/// Starting spacing used when none is given: the edge of the cube with the
/// bounding box's volume divided by 32 (by 8 in 3D), rounded up to a power
/// of two so that lattice and box faces line up, and kept below half the
/// shortest edge.
double default_h_start(const Domain& domain);

struct RefineOptions {
  std::size_t max_points = kDefaultMaxGridPoints;
  EigenOptions eigen;
  /// Keep grid, matrix and spectrum of the last level in the study.
  bool keep_finest = true;
};

/// Computes lambda1 at h_start / 2^i for i = 0..levels-1, fits the observed
/// order and Richardson-extrapolates. Throws InputError for fewer than three
/// levels or an infeasible grid, SolverError when a level fails to converge.
ConvergenceStudy refine(const Domain& domain, double h_start, std::size_t levels,
                        double tol = kDefaultEigenTol, const RefineOptions& options = {});

/// Fits order and extrapolants for an already computed lambda1 sequence
/// (spacings halving at each level).
ConvergenceStudy analyze_sequence(std::vector<double> spacings,
                                  std::vector<double> lambda1_values);

/// CSV with header "h,lambda1,diff,extrapolant"; the first row leaves diff
/// and extrapolant empty.
void write_study_csv(const ConvergenceStudy& study, std::ostream& out);

}  // namespace isobound
