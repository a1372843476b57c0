#pragma once

namespace isobound {

/// Bessel function of the first kind J_order(x) for x >= 0.
///
/// Supported orders are the half-integers -1/2 ... 9/2 and the integers
/// 0 ... 5. The orders -1/2 and 1/2 use their trigonometric closed forms;
/// everything else uses the ascending series for x <= 12 and, beyond that,
/// Miller's backward recurrence (integer orders) or upward recurrence from
/// the closed forms (half-integer orders). Absolute error is below 1e-12 on
/// [0, 50]. J_{-1/2}(0) is +infinity.
///
/// Throws InputError for negative x or an unsupported order.
double bessel_j(double order, double x);

/// Ascending power series for J_order(x), evaluated in extended precision.
/// Exposed for cross-checking the closed forms; accurate for x <= 12.
double bessel_j_series(double order, double x);

bool is_supported_bessel_order(double order);

/// First positive zero j_{order,1} with its certificate.
struct BesselZero {
  double order = 0.0;
  double value = 0.0;
  /// |J_order(value)|.
  double residual = 0.0;
  /// Final bisection bracket; J changes sign across it.
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

inline constexpr double kZeroScanStep = 0.1;
inline constexpr double kZeroScanLimit = 30.0;
inline constexpr double kZeroBracketWidth = 1e-14;

/// Locates the smallest positive root of J_order by scanning x = 0.1, 0.2,
/// ... up to 30 for a sign change, then bisecting the bracket down to width
/// 1e-14. Throws InputError if the order is unsupported or no sign change is
/// found in the scan range.
BesselZero first_zero(double order);

}  // namespace isobound
