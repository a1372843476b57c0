// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "isobound/convergence.hpp"
#include "isobound/format.hpp"
#include "isobound/specfun.hpp"
#include "isobound/uncertainty.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace isobound;
using oracle::kJ01;
using oracle::kPi;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [violated: " << what << "]";
    }
  }
};

std::string fmt(double x, int digits = 6) { return format_real(x, digits); }

struct NamedDomain {
  std::string name;
  Domain domain;
};

// Studies at default h_start and levels, computed once and shared.
class StudyCache {
 public:
  const ConvergenceStudy& get(const std::string& name, const Domain& d) {
    auto it = studies_.find(name);
    if (it == studies_.end()) {
      const auto t0 = Clock::now();
      it = studies_.emplace(name, refine(d, default_h_start(d), kDefaultLevels)).first;
      seconds_[name] = seconds_since(t0);
    }
    return it->second;
  }
  double seconds(const std::string& name) const { return seconds_.at(name); }

 private:
  std::map<std::string, ConvergenceStudy> studies_;
  std::map<std::string, double> seconds_;
};

StudyCache cache;

UncertaintyReport certify(const Domain& d, const ConvergenceStudy& s, double hbar = 1.0) {
  const auto& f = *s.finest;
  return certify_bounds(d, {s.extrapolated, s.error_estimate}, f.grid, f.matrix,
                        f.spectrum.eigenvalues[0], ground_state(f.spectrum), {hbar});
}

const Domain kDisk = oracle::unit_disk();
const Domain kSquare = oracle::unit_square();
const Domain kBall3 = Domain::ball(3, 1.0);

std::vector<NamedDomain> krahn_suite() {
  return {{"disk", kDisk},
          {"square", kSquare},
          {"rectangle 2:1", Domain::box({0.0, 0.0}, {2.0, 1.0})},
          {"rectangle 4:1", Domain::box({0.0, 0.0}, {4.0, 1.0})},
          {"ellipse 2:1", Domain::ellipse({2.0, 1.0})},
          {"L-polygon", oracle::l_polygon()},
          {"ball n=3", kBall3}};
}

// Every assembled matrix with N <= 200 used by the solver-level criteria.
std::vector<std::pair<std::string, OperatorMatrix>> small_matrices() {
  std::vector<std::pair<std::string, OperatorMatrix>> out;
  auto add = [&](const std::string& name, const Domain& d, double h) {
    Grid g = build_grid(d, h);
    if (g.point_count() <= 200) out.emplace_back(name + " h=" + fmt(h), assemble(g));
  };
  for (int n : {4, 8, 16, 32, 64, 128, 201}) add("interval", oracle::unit_interval(), 1.0 / n);
  for (int n : {3, 4, 8, 12, 15}) add("square", kSquare, 1.0 / n);
  add("rectangle 2:1", Domain::box({0.0, 0.0}, {2.0, 1.0}), 0.125);
  for (double h : {0.5, 0.25, 0.2, 0.125}) add("disk", kDisk, h);
  add("ellipse 2:1", Domain::ellipse({2.0, 1.0}), 0.25);
  add("L-polygon", oracle::l_polygon(), 0.25);
  add("L-polygon", oracle::l_polygon(), 0.125);
  add("cube", oracle::unit_cube(), 0.25);
  add("cube", oracle::unit_cube(), 0.2);
  add("ball n=3", kBall3, 0.5);
  add("ball n=3", kBall3, 0.4);
  add("raster mask", oracle::raster_from_rows({"##..", "####", ".###", "..##"}, 0.5), 0.25);
  return out;
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto j0 = first_zero(0.0);
  const auto jm = first_zero(-0.5);
  const auto jp = first_zero(0.5);
  const double t = seconds_since(t0);
  o.require(std::abs(j0.value - 2.40482555769) <= 1e-9, "j_{0,1} within 1e-9");
  o.require(std::abs(jm.value - kPi / 2) <= 1e-12, "j_{-1/2,1} = pi/2 within 1e-12");
  o.require(std::abs(jp.value - kPi) <= 1e-12, "j_{1/2,1} = pi within 1e-12");
  o.require(t < 1.0, "runtime < 1 s");
  o.detail << "j0=" << fmt(j0.value, 12) << " j-1/2=" << fmt(jm.value, 12)
           << " j1/2=" << fmt(jp.value, 12) << " t=" << fmt(t, 3) << "s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = Clock::now();
  std::ostringstream out, err;
  const int code = cli::run({"bessel-zeros"}, out, err);
  const double t = seconds_since(t0);
  o.require(code == 0, "exit 0");
  const auto rows = nlohmann::json::parse(out.str())["bessel_zeros"];
  const double expected[] = {kPi, 2.0 * 2.40482555769, 2.0 * kPi};
  for (std::size_t i = 0; i < 3; ++i) {
    const double two_j = rows.at(i)["two_j"].get<double>();
    o.require(std::abs(two_j - expected[i]) <= 2e-9, "2j row " + std::to_string(i + 1));
    o.detail << "n=" << i + 1 << ":2j=" << fmt(two_j, 12) << " ";
  }
  o.require(rows.at(1)["two_j"].get<double>() >= 4.8, "n=2 value >= 4.8");
  o.require(t < 1.0, "runtime < 1 s");
  o.detail << "t=" << fmt(t, 3) << "s";
  return o;
}

Outcome criterion3() {
  Outcome o;
  struct Row {
    const char* name;
    Domain domain;
    double exact;
    double tol;
  };
  const Row rows[] = {{"interval", oracle::unit_interval(), kPi * kPi, 1e-3},
                      {"square", kSquare, 2 * kPi * kPi, 1e-3},
                      {"cube", oracle::unit_cube(), 3 * kPi * kPi, 5e-3},
                      {"disk", kDisk, kJ01 * kJ01, 5e-3}};
  double total = 0.0;
  for (const auto& r : rows) {
    const auto& s = cache.get(r.name, r.domain);
    total += cache.seconds(r.name);
    const double rel = s.extrapolated / r.exact - 1.0;
    o.require(std::abs(rel) <= r.tol, std::string(r.name) + " within " + fmt(r.tol));
    o.detail << r.name << ":" << fmt(s.extrapolated, 9) << " (rel " << fmt(rel, 3) << ") ";
  }
  o.require(total <= 60.0, "total runtime <= 60 s");
  o.detail << "t=" << fmt(total, 3) << "s";
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (const auto& [name, d] : krahn_suite()) {
    const auto& s = cache.get(name, d);
    const double ratio = krahn_ratio(s.extrapolated, metrics(d), d.dim());
    o.require(ratio >= 1.0 - kToleranceBandFactor * s.relative_error(),
              name + " ratio >= 1 - band");
    o.detail << name << ":" << fmt(ratio) << " ";
    if (name == "disk" || name == "ball n=3")
      o.require(std::abs(ratio - 1.0) <= 1e-2, name + " within 1% of 1");
    if (name == "square")
      o.require(std::abs(ratio / (2 * kPi / (kJ01 * kJ01)) - 1.0) <= 1e-2,
                "square within 1% of 2pi/j^2");
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  int violations = 0;
  double worst_ground = 0.0;
  for (const auto& [name, d] : krahn_suite()) {
    const auto& f = *cache.get(name, d).finest;
    const double lambda_h = f.spectrum.eigenvalues[0];
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto field = WaveField::normalized(oracle::random_vector(f.grid.point_count(), seed),
                                               f.grid.cell_volume());
      if (momentum_stddev(f.matrix, field) < std::sqrt(lambda_h)) ++violations;
    }
    const double margin =
        momentum_stddev(f.matrix, ground_state(f.spectrum)) / std::sqrt(lambda_h) - 1.0;
    worst_ground = std::max(worst_ground, margin);
  }
  o.require(violations == 0, "zero violations over random fields");
  o.require(worst_ground <= 1e-8, "ground-state margin <= 1e-8");
  o.detail << "domains=" << krahn_suite().size() << " fields/domain=100 violations=" << violations
           << " worst ground margin=" << fmt(worst_ground, 3);
  return o;
}

Outcome criterion6() {
  Outcome o;
  struct Row {
    const char* name;
    Domain domain;
    double target;
    double tol;
  };
  const Row balls[] = {{"ball n=1", Domain::ball(1, 1.0), kPi, 1e-3},
                       {"disk", kDisk, 2 * kJ01, 1e-2},
                       {"ball n=3", kBall3, 2 * kPi, 1e-2}};
  for (const auto& b : balls) {
    const auto& s = cache.get(b.name, b.domain);
    const auto r = certify(b.domain, s);
    const double d = r.metrics.diameter.value;
    // Products along the refinement sequence, from each level's extrapolant;
    // "from above" uses the same tolerance band as the bound checks.
    std::vector<double> products;
    for (std::size_t i = 1; i < s.extrapolants.size(); ++i)
      products.push_back(std::sqrt(s.extrapolants[i]) * d);
    const bool from_above = std::all_of(products.begin(), products.end(), [&](double p) {
      return p >= b.target * (1.0 - r.tolerance_band);
    });
    o.require(std::abs(r.diameter_product / b.target - 1.0) <= b.tol,
              std::string(b.name) + " within " + fmt(b.tol));
    o.require(from_above, std::string(b.name) + " sequence from above");
    const bool strictly = std::all_of(products.begin(), products.end(),
                                      [&](double p) { return p >= b.target; });
    o.detail << b.name << ":";
    for (double p : products) o.detail << fmt(p, 8) << ">";
    o.detail << fmt(r.diameter_product, 8)
             << (strictly ? " (strictly above) " : " (above within band) ");
  }
  const auto r = certify(kSquare, cache.get("square", kSquare));
  o.require(r.diameter_product >= 2 * kJ01 * 1.05, "square margin > 5%");
  o.detail << "square:" << fmt(r.diameter_product, 8) << " (margin " << fmt(r.margins.diameter, 4)
           << ")";
  return o;
}

Outcome criterion7() {
  Outcome o;
  double worst_dense = 0.0, worst_closed = 0.0;
  std::size_t matrices = 0;
  for (const auto& [name, a] : small_matrices()) {
    ++matrices;
    const std::size_t k = std::min<std::size_t>(a.size(), 8);
    const auto s = smallest_eigenpairs(a, k);
    Eigen::MatrixXd dense(a.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j)
        dense(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a.entry(i, j);
    const auto ev = oracle::dense_eigenvalues(dense);
    for (std::size_t i = 0; i < k; ++i)
      worst_dense = std::max(worst_dense,
                             std::abs(s.eigenvalues[i] / ev(static_cast<Eigen::Index>(i)) - 1.0));
    if (a.dim() == 1) {
      const double h = a.spacing();
      for (std::size_t i = 0; i < k; ++i)
        worst_closed = std::max(
            worst_closed,
            std::abs(s.eigenvalues[i] / oracle::interval_eigenvalue(static_cast<int>(i + 1), h) -
                     1.0));
    }
  }
  o.require(worst_dense <= 1e-8, "dense oracle within 1e-8 relative");
  o.require(worst_closed <= 1e-10, "interval closed form within 1e-10 relative");
  o.detail << "matrices=" << matrices << " worst dense rel=" << fmt(worst_dense, 3)
           << " worst closed-form rel=" << fmt(worst_closed, 3);
  return o;
}

Outcome criterion8() {
  Outcome o;
  int rayleigh_violations = 0;
  double worst_ortho = 0.0, worst_mean = 0.0;
  bool positive = true;
  for (const auto& [name, a] : small_matrices()) {
    const std::size_t k = std::min<std::size_t>(a.size(), 4);
    const auto s = smallest_eigenpairs(a, k);
    const double lambda1 = s.eigenvalues[0];
    for (std::uint64_t seed = 0; seed < 1000; ++seed)
      if (rayleigh_quotient(a, oracle::random_vector(a.size(), 5000 + seed)) <
          lambda1 - 1e-8 * lambda1)
        ++rayleigh_violations;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        double dot = 0.0;
        for (std::size_t p = 0; p < a.size(); ++p)
          dot += s.eigenvectors[i][p] * s.eigenvectors[j][p];
        worst_ortho = std::max(worst_ortho,
                               std::abs(dot * s.inner_product_weight - (i == j ? 1.0 : 0.0)));
      }
    positive = positive && *std::min_element(s.eigenvectors[0].begin(),
                                             s.eigenvectors[0].end()) > 0.0;
  }
  for (const auto& [name, d] : krahn_suite()) {
    const auto& f = *cache.get(name, d).finest;
    for (double p : mean_momentum(f.grid, ground_state(f.spectrum)))
      worst_mean = std::max(worst_mean, std::abs(p) * f.grid.spacing());
  }
  const auto& disk_study = cache.get("disk", kDisk);
  const auto r1 = certify(kDisk, disk_study, 1.0);
  const auto r2 = certify(kDisk, disk_study, 2.0);
  const bool covariant = r2.sigma_p == 2.0 * r1.sigma_p &&
                         r2.diameter_product == r1.diameter_product &&
                         r2.krahn_ratio == r1.krahn_ratio &&
                         r2.margins.rayleigh == r1.margins.rayleigh &&
                         r2.margins.diameter == r1.margins.diameter &&
                         r2.margins.kennard == r1.margins.kennard;

  std::string artifacts[2][2];
  const std::string disk = R"({"kind":"ball","dim":2,"params":{"radius":1}})";
  for (int run = 0; run < 2; ++run) {
    int f = 0;
    for (const char* format : {"json", "csv"}) {
      std::ostringstream out, err;
      cli::run({"certify", "--domain", disk, "--h-start", "0.125", "--format", format}, out, err);
      artifacts[run][f++] = out.str();
    }
  }
  const bool deterministic = !artifacts[0][0].empty() && artifacts[0][0] == artifacts[1][0] &&
                             artifacts[0][1] == artifacts[1][1];

  o.require(rayleigh_violations == 0, "Rayleigh domination");
  o.require(worst_ortho <= 1e-8, "orthonormality 1e-8");
  o.require(positive, "ground-state positivity");
  o.require(worst_mean <= 1e-10, "mean momentum <= 1e-10 hbar/h");
  o.require(covariant, "hbar covariance at c=2");
  o.require(deterministic, "byte-identical artifacts");
  o.detail << "rayleigh violations=" << rayleigh_violations << " ortho=" << fmt(worst_ortho, 3)
           << " positive=" << positive << " mean_p*h/hbar=" << fmt(worst_mean, 3)
           << " covariant=" << covariant << " deterministic=" << deterministic;
  return o;
}

Outcome criterion9() {
  Outcome o;
  const std::vector<NamedDomain> aligned = {
      {"interval", oracle::unit_interval()},
      {"square", kSquare},
      {"rectangle 2:1", Domain::box({0.0, 0.0}, {2.0, 1.0})},
      {"rectangle 4:1", Domain::box({0.0, 0.0}, {4.0, 1.0})},
      {"cube", oracle::unit_cube()}};
  for (const auto& [name, d] : aligned) {
    const double p = cache.get(name, d).observed_order;
    o.require(std::abs(p - 2.0) <= 0.1, name + " order 2 +- 0.1");
    o.detail << name << ":p=" << fmt(p, 4) << " ";
  }
  const std::vector<NamedDomain> curved = {
      {"disk", kDisk},
      {"ellipse 2:1", Domain::ellipse({2.0, 1.0})},
      {"raster L", oracle::raster_from_rows({"##..", "##..", "####", "####"}, 0.25)}};
  for (const auto& [name, d] : curved) {
    const auto& a = cache.get(name, d);
    const double h1 = default_h_start(d) * 4.0 / 3.0;
    const auto b = refine(d, h1, kDefaultLevels);
    const double gap = std::abs(a.extrapolated - b.extrapolated);
    const double allowed = std::max(a.error_estimate, b.error_estimate);
    o.require(gap <= allowed, name + " h_start agreement");
    o.detail << name << ":p=" << fmt(a.observed_order, 4) << " gap=" << fmt(gap, 3)
             << " allowed=" << fmt(allowed, 3) << " ";
  }
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"Bessel constants", criterion1},
      {"diameter-bound constants", criterion2},
      {"analytic eigenvalues", criterion3},
      {"Krahn certification", criterion4},
      {"momentum bound", criterion5},
      {"diameter bounds", criterion6},
      {"solver oracle equivalence", criterion7},
      {"property suites", criterion8},
      {"convergence orders", criterion9},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << index << " (" << name
              << "): " << o.detail.str() << std::endl;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (9 - failed) << "/9" << std::endl;
  return failed ? 1 : 0;
}
