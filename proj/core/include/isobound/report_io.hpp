#pragma once

#include <iosfwd>
#include <string>

#include "isobound/convergence.hpp"
#include "isobound/geometry.hpp"
#include "isobound/uncertainty.hpp"

namespace isobound {

// All numbers in these artifacts carry 12 significant digits, so identical
// inputs give byte-identical output.

/// Report JSON. Always present: lambda1, lambda1_error, sigma_p, sigma_x
/// (null when not computed), krahn_ratio, diameter_product, margins,
/// equality_flags. The study, when given, is embedded under "study".
std::string report_to_json(const UncertaintyReport& report,
                           const ConvergenceStudy* study = nullptr);

/// Column names of the one-row report CSV.
std::string report_csv_header();
/// One CSV row (no trailing newline) matching report_csv_header().
std::string report_csv_row(const UncertaintyReport& report);

/// JSON with the refinement table and extrapolation summary.
std::string study_to_json(const ConvergenceStudy& study);

std::string metrics_to_json(const DomainMetrics& metrics);

/// Output of the lambda1 pipeline: domain, run settings, extrapolated
/// eigenvalue with its error estimate, and the full study.
std::string lambda1_to_json(const Domain& domain, const ConvergenceStudy& study, double tol);

}  // namespace isobound
