#include "isobound/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "isobound/errors.hpp"
#include "isobound/format.hpp"
#include "isobound/geometry.hpp"

namespace isobound {

namespace {

constexpr double kSeriesLimit = 12.0;

bool is_integer(double v) { return v == std::round(v); }

bool is_half_integer(double v) { return !is_integer(v) && is_integer(2.0 * v); }

double half_integer_closed(double order, double x) {
  const double scale = std::sqrt(2.0 / (std::numbers::pi * x));
  if (order < 0) return scale * std::cos(x);
  return scale * std::sin(x);
}

// Upward recurrence J_{v+1} = (2v/x) J_v - J_{v-1}; stable while x > v.
double half_integer_upward(double order, double x) {
  double prev = half_integer_closed(-0.5, x);
  double cur = half_integer_closed(0.5, x);
  for (double v = 0.5; v < order; v += 1.0) {
    const double next = (2.0 * v / x) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Miller's algorithm: recur downward from a large start order and normalize
// with J_0 + 2 * sum_k J_{2k} = 1.
double integer_miller(int order, double x) {
  const int start = 2 * ((std::max(order, static_cast<int>(x)) + 40) / 2);
  double next = 0.0;
  double cur = 1e-300;
  double norm = 0.0;
  double wanted = 0.0;
  for (int k = start; k >= 0; --k) {
    if (k == order) wanted = cur;
    norm += (k == 0) ? cur : ((k % 2 == 0) ? 2.0 * cur : 0.0);
    if (k == 0) break;
    const double prev = (2.0 * k / x) * cur - next;
    next = cur;
    cur = prev;
    if (std::abs(cur) > 1e250) {  // rescale to stay in range
      cur *= 1e-250;
      next *= 1e-250;
      norm *= 1e-250;
      wanted *= 1e-250;
    }
  }
  return wanted / norm;
}

void check_args(double order, double x) {
  if (!is_supported_bessel_order(order))
    throw InputError("unsupported Bessel order " + format_real(order));
  if (!(x >= 0) || !std::isfinite(x))
    throw InputError("Bessel argument must be finite and >= 0");
}

}  // namespace

bool is_supported_bessel_order(double order) {
  if (is_integer(order)) return order >= 0 && order <= 5;
  if (is_half_integer(order)) return order >= -0.5 && order <= 4.5;
  return false;
}

double bessel_j_series(double order, double x) {
  check_args(order, x);
  if (x == 0.0) {
    if (order == 0.0) return 1.0;
    return order > 0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  using ld = long double;
  const ld half = static_cast<ld>(x) / 2;
  const ld q = -half * half;
  // First term (x/2)^v / Gamma(v+1).
  ld term = std::pow(half, static_cast<ld>(order)) /
            static_cast<ld>(gamma_half_integer(order + 1.0));
  ld sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<ld>(k) * (static_cast<ld>(k) + static_cast<ld>(order)));
    sum += term;
    if (std::abs(term) < 1e-22L * std::max<ld>(1.0L, std::abs(sum))) break;
  }
  return static_cast<double>(sum);
}

double bessel_j(double order, double x) {
  check_args(order, x);
  if (is_half_integer(order)) {
    if (x == 0.0) return bessel_j_series(order, x);
    if (order == -0.5 || order == 0.5) return half_integer_closed(order, x);
    if (x <= kSeriesLimit) return bessel_j_series(order, x);
    return half_integer_upward(order, x);
  }
  if (x <= kSeriesLimit) return bessel_j_series(order, x);
  return integer_miller(static_cast<int>(order), x);
}

BesselZero first_zero(double order) {
  if (!is_supported_bessel_order(order))
    throw InputError("unsupported Bessel order " + format_real(order));
  double lo = kZeroScanStep;
  double f_lo = bessel_j(order, lo);
  for (int i = 2; lo < kZeroScanLimit; ++i) {
    const double hi = kZeroScanStep * i;
    const double f_hi = bessel_j(order, hi);
    if ((f_lo > 0) != (f_hi > 0) || f_hi == 0.0) {
      double a = lo, b = hi, fa = f_lo;
      while (b - a > kZeroBracketWidth) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        const double fm = bessel_j(order, mid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if ((fm > 0) == (fa > 0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      BesselZero z;
      z.order = order;
      z.value = 0.5 * (a + b);
      z.residual = std::abs(bessel_j(order, z.value));
      z.bracket_lo = a;
      z.bracket_hi = b;
      return z;
    }
    lo = hi;
    f_lo = f_hi;
  }
  throw InputError("no sign change of J_" + format_real(order) +
                   " found in (0, 30]");
}

}  // namespace isobound
