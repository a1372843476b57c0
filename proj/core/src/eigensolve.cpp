#include "isobound/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "dense_eigen.hpp"
#include "isobound/errors.hpp"

namespace isobound {

namespace detail {

DenseEigen jacobi_eigen(std::vector<double> a, std::size_t n) {
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  auto at = [n](std::vector<double>& m, std::size_t i, std::size_t j) -> double& {
    return m[i * n + j];
  };

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) off += at(a, i, j) * at(a, i, j);
        scale += at(a, i, j) * at(a, i, j);
      }
    if (off <= 1e-30 * scale || off == 0.0) break;

    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(a, p, q);
        if (apq == 0.0) continue;
        const double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(a, k, p), akq = at(a, k, q);
          at(a, k, p) = c * akp - s * akq;
          at(a, k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(a, p, k), aqk = at(a, q, k);
          at(a, p, k) = c * apk - s * aqk;
          at(a, q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = at(v, k, p), vkq = at(v, k, q);
          at(v, k, p) = c * vkp - s * vkq;
          at(v, k, q) = s * vkp + c * vkq;
        }
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a[x * n + x] < a[y * n + y];
  });
  DenseEigen out;
  out.values.resize(n);
  out.vectors.resize(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a[order[j] * n + order[j]];
    for (std::size_t i = 0; i < n; ++i) out.vectors[i * n + j] = v[i * n + order[j]];
  }
  return out;
}

}  // namespace detail

namespace {

using Vec = std::vector<double>;

constexpr double kClusterRatio = 0.9;
constexpr std::size_t kMaxExtraGuard = 8;

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void scale(std::span<double> x, double alpha) {
  for (double& v : x) v *= alpha;
}

// Uniform doubles in [lo, hi) from the raw 64-bit engine output, so the
// stream is identical across standard libraries.
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : engine_(seed) {}
  double operator()(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

 private:
  std::mt19937_64 engine_;
};

// Conjugate gradients for A y = b, warm-started from y. Stops once the
// recursively updated residual falls below rel_tol * ||b||.
std::size_t conjugate_gradient(const OperatorMatrix& a, std::span<const double> b,
                        std::span<double> y, double rel_tol, double reduction,
                        std::size_t max_iter) {
  const std::size_t n = b.size();
  Vec r(n), p(n), ap(n);
  a.multiply(y, ap);
  for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - ap[i];
  double rr = dot(r, r);
  const double target = std::max(rel_tol * norm(b), reduction * std::sqrt(rr));
  if (std::sqrt(rr) <= target) return 0;
  p = r;
  std::size_t it = 0;
  for (; it < max_iter; ++it) {
    a.multiply(p, ap);
    const double pap = dot(p, ap);
    if (!(pap > 0)) break;
    const double alpha = rr / pap;
    axpy(alpha, p, y);
    axpy(-alpha, ap, r);
    const double rr_next = dot(r, r);
    if (std::sqrt(rr_next) <= target) break;
    const double beta = rr_next / rr;
    rr = rr_next;
    for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
  }
  return it;
}

// Orthonormalizes v against `basis` (already orthonormal) with two passes of
// modified Gram-Schmidt. Returns false if v is numerically in their span.
bool orthonormalize_against(std::span<double> v, const std::vector<Vec>& basis) {
  const double original = norm(v);
  if (original == 0.0) return false;
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& q : basis) axpy(-dot(q, v), q, v);
  const double remaining = norm(v);
  if (remaining <= 1e-10 * original) return false;
  scale(v, 1.0 / remaining);
  return true;
}

}  // namespace

double eigen_residual(const OperatorMatrix& matrix, double lambda,
                      std::span<const double> v) {
  Vec av = matrix.multiply(v);
  for (std::size_t i = 0; i < v.size(); ++i) av[i] -= lambda * v[i];
  return norm(av) / norm(v);
}

Spectrum smallest_eigenpairs(const OperatorMatrix& matrix, std::size_t k, double tol,
                             const EigenOptions& options) {
  const std::size_t n = matrix.size();
  if (k == 0) throw InputError("requested zero eigenpairs");
  if (k > n)
    throw InputError("requested " + std::to_string(k) + " eigenpairs of a " +
                     std::to_string(n) + "x" + std::to_string(n) + " matrix");
  if (!(tol > 0)) throw InputError("eigen tolerance must be positive");

  const std::size_t block = std::min(n, k + options.guard_vectors);
  const std::size_t max_outer =
      options.max_outer_iterations > 0
          ? options.max_outer_iterations
          : static_cast<std::size_t>(std::ceil(50.0 * std::sqrt(static_cast<double>(n))));
  const double cg_tol = 0.1 * tol;
  const std::size_t cg_max = 10 * n + 100;

  Uniform uniform(options.seed);
  auto random_vector = [&](bool positive) {
    Vec v(n);
    for (double& x : v) x = positive ? uniform(0.0, 1.0) : uniform(-1.0, 1.0);
    return v;
  };

  std::vector<Vec> locked;
  std::vector<double> locked_values;

  // Active block, kept orthonormal and orthogonal to the locked vectors.
  std::vector<Vec> active;
  std::vector<double> ritz(block, 0.0);
  for (std::size_t j = 0; j < block; ++j) {
    Vec v = random_vector(j == 0);
    while (!orthonormalize_against(v, active)) v = random_vector(false);
    active.push_back(std::move(v));
  }

  double best_residual = std::numeric_limits<double>::infinity();
  std::size_t extra_guard = 0;
  std::size_t cg_total = 0;
  std::size_t outer = 0;
  for (bool have_ritz = false; locked.size() < k; have_ritz = true) {
    if (outer == max_outer)
      throw SolverError("inverse iteration did not converge within " +
                            std::to_string(max_outer) + " iterations",
                        best_residual);
    ++outer;

    // Inverse step, warm-started from x / theta.
    std::vector<Vec> next;
    next.reserve(active.size());
    for (std::size_t j = 0; j < active.size(); ++j) {
      Vec y(n, 0.0);
      if (have_ritz && ritz[j] > 0)
        for (std::size_t i = 0; i < n; ++i) y[i] = active[j][i] / ritz[j];
      cg_total += conjugate_gradient(matrix, active[j], y, cg_tol,
                                     have_ritz ? options.inner_reduction : 0.0, cg_max);
      next.push_back(std::move(y));
    }

    // Orthonormalize against locked vectors and each other.
    std::vector<Vec> basis = locked;
    std::vector<Vec> q;
    for (auto& y : next) {
      while (!orthonormalize_against(y, basis)) y = random_vector(false);
      basis.push_back(y);
      q.push_back(std::move(y));
    }

    // Rayleigh-Ritz on span(q).
    const std::size_t m = q.size();
    std::vector<Vec> aq(m);
    for (std::size_t j = 0; j < m; ++j) aq[j] = matrix.multiply(q[j]);
    std::vector<double> h(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) {
        const double v = 0.5 * (dot(q[i], aq[j]) + dot(q[j], aq[i]));
        h[i * m + j] = v;
        h[j * m + i] = v;
      }
    const auto eig = detail::jacobi_eigen(std::move(h), m);

    std::vector<Vec> ritz_vectors(m, Vec(n, 0.0));
    std::vector<Vec> ritz_images(m, Vec(n, 0.0));
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < m; ++i) {
        const double c = eig.vectors[i * m + j];
        axpy(c, q[i], ritz_vectors[j]);
        axpy(c, aq[i], ritz_images[j]);
      }

    // Lock leading pairs in order as long as they meet the tolerance.
    std::size_t newly_locked = 0;
    double worst_unlocked = 0.0;
    for (std::size_t j = 0; j < m && locked.size() + j < k; ++j) {
      Vec r = ritz_images[j];
      axpy(-eig.values[j], ritz_vectors[j], r);
      const double rel = norm(r) / (norm(ritz_vectors[j]) * std::abs(eig.values[j]));
      if (newly_locked == j && rel <= tol) {
        ++newly_locked;
      } else {
        worst_unlocked = std::max(worst_unlocked, rel);
      }
    }
    if (worst_unlocked > 0) best_residual = std::min(best_residual, worst_unlocked);

    for (std::size_t j = 0; j < newly_locked; ++j) {
      locked.push_back(ritz_vectors[j]);
      locked_values.push_back(eig.values[j]);
    }
    active.assign(ritz_vectors.begin() + static_cast<std::ptrdiff_t>(newly_locked),
                  ritz_vectors.end());
    ritz.assign(eig.values.begin() + static_cast<std::ptrdiff_t>(newly_locked),
                eig.values.end());
    // Keep the active block no larger than needed for the remaining pairs.
    const std::size_t remaining = k - std::min(k, locked.size());
    const std::size_t wanted_active =
        std::min(n - locked.size(), remaining + options.guard_vectors + extra_guard);
    if (active.size() > wanted_active) {
      active.resize(wanted_active);
      ritz.resize(wanted_active);
    }
    // A block edge inside a cluster converges at rate theta_k / theta_top ~ 1;
    // widen the block until the top Ritz value is separated.
    if (remaining > 0 && remaining < active.size() && extra_guard < kMaxExtraGuard &&
        active.size() < n - locked.size() &&
        ritz[remaining - 1] > kClusterRatio * ritz.back()) {
      std::vector<Vec> basis = locked;
      basis.insert(basis.end(), active.begin(), active.end());
      Vec v = random_vector(false);
      while (!orthonormalize_against(v, basis)) v = random_vector(false);
      active.push_back(std::move(v));
      ritz.push_back(0.0);
      ++extra_guard;
    }
    if (active.empty() && locked.size() < k)
      throw SolverError("active block exhausted before convergence", best_residual);
  }

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return locked_values[a] < locked_values[b];
  });

  Spectrum out;
  out.iterations = outer;
  out.inner_iterations = cg_total;
  out.inner_product_weight = std::pow(matrix.spacing(), static_cast<double>(matrix.dim()));
  const double unit = 1.0 / std::sqrt(out.inner_product_weight);
  for (std::size_t idx : order) {
    Vec v = std::move(locked[idx]);
    const double sum = std::accumulate(v.begin(), v.end(), 0.0);
    const double s = (sum < 0 ? -unit : unit) / norm(v);
    scale(v, s);
    out.eigenvalues.push_back(locked_values[idx]);
    out.residuals.push_back(eigen_residual(matrix, locked_values[idx], v));
    out.eigenvectors.push_back(std::move(v));
  }
  return out;
}

WaveField::WaveField(std::vector<double> values, double weight)
    : values_(std::move(values)), weight_(weight) {
  if (!(weight_ > 0)) throw InputError("wave field weight must be positive");
}

WaveField WaveField::normalized(std::vector<double> values, double weight) {
  WaveField f(std::move(values), weight);
  const double n2 = f.norm_squared();
  if (!(n2 > 0)) throw InputError("cannot normalize a zero wave field");
  scale(f.values_, 1.0 / std::sqrt(n2));
  return f;
}

double WaveField::norm_squared() const { return weight_ * dot(values_, values_); }

bool WaveField::is_normalized() const { return std::abs(norm_squared() - 1.0) <= 1e-10; }

WaveField ground_state(const Spectrum& spectrum) {
  if (spectrum.eigenvectors.empty()) throw InputError("spectrum is empty");
  return WaveField(spectrum.eigenvectors.front(), spectrum.inner_product_weight);
}

double rayleigh_quotient(const OperatorMatrix& matrix, std::span<const double> psi) {
  if (psi.size() != matrix.size())
    throw InputError("wave field length does not match the operator");
  const double denom = dot(psi, psi);
  if (!(denom > 0)) throw InputError("Rayleigh quotient of a zero vector");
  return matrix.quadratic_form(psi) / denom;
}

double rayleigh_quotient(const OperatorMatrix& matrix, const WaveField& field) {
  return rayleigh_quotient(matrix, field.values());
}

}  // namespace isobound
