#include "isobound/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

#include "isobound/errors.hpp"
#include "isobound/format.hpp"

namespace isobound {

double default_h_start(const Domain& domain) {
  const auto& bbox = domain.bounding_box();
  const int n = domain.dim();
  const double target = std::pow(bbox.volume(), 1.0 / n) / (n == 3 ? 8.0 : 32.0);
  double h = std::pow(2.0, std::ceil(std::log2(target)));
  while (!(h < 0.5 * bbox.shortest_edge())) h *= 0.5;
  return h;
}

ConvergenceStudy analyze_sequence(std::vector<double> spacings,
                                  std::vector<double> lambda1_values) {
  if (spacings.size() != lambda1_values.size())
    throw InputError("spacings and eigenvalues differ in length");
  if (spacings.size() < kMinRefinementLevels)
    throw InputError("a convergence study needs at least 3 levels");
  for (std::size_t i = 1; i < spacings.size(); ++i)
    if (!(spacings[i] < spacings[i - 1]))
      throw InputError("spacings must be strictly decreasing");

  ConvergenceStudy s;
  s.spacings = std::move(spacings);
  s.lambda1_values = std::move(lambda1_values);
  const std::size_t levels = s.spacings.size();

  int sign = 0;
  for (std::size_t i = 0; i + 1 < levels; ++i) {
    const double d = s.lambda1_values[i] - s.lambda1_values[i + 1];
    s.differences.push_back(d);
    const int sd = (d > 0) - (d < 0);
    if (sd == 0 || (sign != 0 && sd != sign)) s.monotone = false;
    if (sign == 0) sign = sd;
  }

  // Least-squares slope of log|d_i| against log h_i.
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < s.differences.size(); ++i)
    if (s.differences[i] != 0.0) {
      xs.push_back(std::log(s.spacings[i]));
      ys.push_back(std::log(std::abs(s.differences[i])));
    }
  if (xs.size() >= 2) {
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    s.observed_order = sxy / sxx;
  } else {
    s.observed_order = std::numeric_limits<double>::quiet_NaN();
  }

  s.extrapolation_order =
      std::isfinite(s.observed_order)
          ? std::clamp(s.observed_order, kMinExtrapolationOrder, kMaxExtrapolationOrder)
          : 2.0;
  const double factor = std::pow(2.0, s.extrapolation_order) - 1.0;
  for (std::size_t i = 0; i + 1 < levels; ++i) {
    const double coarse = s.lambda1_values[i];
    const double fine = s.lambda1_values[i + 1];
    s.extrapolants.push_back(fine + (fine - coarse) / factor);
  }
  s.extrapolated = s.extrapolants.back();
  s.error_estimate = std::abs(s.extrapolants.back() - s.extrapolants[s.extrapolants.size() - 2]);
  if (!(s.extrapolated > 0))
    throw InputError("extrapolated eigenvalue is not positive; refine further");
  return s;
}

ConvergenceStudy refine(const Domain& domain, double h_start, std::size_t levels,
                        double tol, const RefineOptions& options) {
  if (levels < kMinRefinementLevels)
    throw InputError("refinement needs at least 3 levels, got " + std::to_string(levels));

  // Check every level against the memory guard before solving anything.
  std::vector<double> spacings;
  const auto& bbox = domain.bounding_box();
  for (std::size_t i = 0; i < levels; ++i) {
    const double h = h_start / std::pow(2.0, static_cast<double>(i));
    double lattice = 1.0;
    for (int d = 0; d < domain.dim(); ++d) lattice *= std::floor(bbox.edge(d) / h) + 1.0;
    if (lattice > static_cast<double>(options.max_points))
      throw InputError("refinement level " + std::to_string(i) + " (h = " + format_real(h) +
                       ") needs " + format_real(lattice) +
                       " lattice points, above the cap of " +
                       std::to_string(options.max_points));
    spacings.push_back(h);
  }

  std::vector<double> lambdas;
  std::vector<std::size_t> counts;
  std::optional<FinestLevel> finest;
  for (std::size_t i = 0; i < levels; ++i) {
    Grid grid = build_grid(domain, spacings[i], options.max_points);
    OperatorMatrix matrix = assemble(grid);
    Spectrum spectrum = smallest_eigenpairs(matrix, 1, tol, options.eigen);
    lambdas.push_back(spectrum.eigenvalues.front());
    counts.push_back(grid.point_count());
    if (i + 1 == levels && options.keep_finest)
      finest = FinestLevel{std::move(grid), std::move(matrix), std::move(spectrum)};
  }

  ConvergenceStudy study = analyze_sequence(std::move(spacings), std::move(lambdas));
  study.point_counts = std::move(counts);
  study.finest = std::move(finest);
  return study;
}

void write_study_csv(const ConvergenceStudy& study, std::ostream& out) {
  out << "h,lambda1,diff,extrapolant\n";
  for (std::size_t i = 0; i < study.spacings.size(); ++i) {
    out << format_real(study.spacings[i]) << ',' << format_real(study.lambda1_values[i])
        << ',';
    if (i > 0)
      out << format_real(study.differences[i - 1]) << ','
          << format_real(study.extrapolants[i - 1]);
    else
      out << ',';
    out << '\n';
  }
}

}  // namespace isobound
