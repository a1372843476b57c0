#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "isobound/convergence.hpp"
#include "isobound/domain_json.hpp"
#include "isobound/errors.hpp"
#include "isobound/format.hpp"
#include "isobound/report_io.hpp"
#include "isobound/specfun.hpp"
#include "isobound/uncertainty.hpp"
#include "json.hpp"

namespace isobound::cli {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string domain_spec;
  std::optional<double> h_start;
  std::size_t levels = kDefaultLevels;
  double tol = kDefaultEigenTol;
  double hbar = 1.0;
  std::string format = "json";
  std::string out_path;
  std::string dump_spec_path;
  std::string dump_matrix_path;
};

struct SweepConfig {
  std::string family;
  std::vector<double> values{1.0, 1.5, 2.0, 4.0};
  std::string dir;
};

void validate(const RunConfig& c) {
  if (c.levels < kMinRefinementLevels) throw InputError("--levels must be at least 3");
  if (!(c.tol > 0)) throw InputError("--tol must be positive");
  if (!(c.hbar > 0)) throw InputError("--hbar must be positive");
  if (c.h_start && !(*c.h_start > 0)) throw InputError("--h-start must be positive");
}

Domain resolve_domain(const std::string& spec) {
  const auto first = std::find_if(spec.begin(), spec.end(),
                                  [](unsigned char c) { return !std::isspace(c); });
  if (first != spec.end() && *first == '{') return parse_domain_spec(spec);
  return load_domain_spec(spec);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  file << text;
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.out_path.empty())
    out << text;
  else
    write_file(c.out_path, text);
}

ConvergenceStudy study_for(const Domain& domain, const RunConfig& c) {
  const double h = c.h_start ? *c.h_start : default_h_start(domain);
  return refine(domain, h, c.levels, c.tol);
}

UncertaintyReport report_for(const Domain& domain, const ConvergenceStudy& study,
                             const RunConfig& c) {
  const auto& fin = *study.finest;
  const PhysicalConstants consts{c.hbar};
  CertifyOptions opts;
  opts.solver_tol = c.tol;
  return certify_bounds(domain, {study.extrapolated, study.error_estimate}, fin.grid, fin.matrix,
                        fin.spectrum.eigenvalues.front(), ground_state(fin.spectrum), consts,
                        opts);
}

void dump_extras(const Domain& domain, const ConvergenceStudy* study, const RunConfig& c) {
  if (!c.dump_spec_path.empty()) write_file(c.dump_spec_path, dump_domain_spec(domain) + "\n");
  if (!c.dump_matrix_path.empty() && study && study->finest) {
    std::ostringstream text;
    study->finest->matrix.write_coordinate(text);
    write_file(c.dump_matrix_path, text.str());
  }
}

int cmd_lambda1(const RunConfig& c, std::ostream& out) {
  validate(c);
  const Domain domain = resolve_domain(c.domain_spec);
  const ConvergenceStudy study = study_for(domain, c);
  dump_extras(domain, &study, c);
  if (c.format == "csv") {
    std::ostringstream text;
    write_study_csv(study, text);
    emit(c, text.str(), out);
  } else {
    emit(c, lambda1_to_json(domain, study, c.tol) + "\n", out);
  }
  return kOk;
}

void print_checks(const UncertaintyReport& r, std::ostream& err) {
  for (const auto& check : r.checks) {
    err << (check.pass ? "PASS " : "FAIL ") << check.name << " margin=" << format_real(check.margin)
        << " tolerance=" << format_real(check.tolerance);
    if (check.equality) err << " equality";
    err << '\n';
  }
}

int cmd_certify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  validate(c);
  const Domain domain = resolve_domain(c.domain_spec);
  const ConvergenceStudy study = study_for(domain, c);
  dump_extras(domain, &study, c);
  const UncertaintyReport report = report_for(domain, study, c);
  if (c.format == "csv")
    emit(c, report_csv_header() + "\n" + report_csv_row(report) + "\n", out);
  else
    emit(c, report_to_json(report, &study) + "\n", out);
  print_checks(report, err);
  return report.all_pass() ? kOk : kBoundViolation;
}

int cmd_bessel_zeros(const RunConfig& c, std::ostream& out) {
  struct Row {
    int n;
    double quoted;
  };
  const Row rows[] = {{1, std::numbers::pi}, {2, 4.8}, {3, 2.0 * std::numbers::pi}};
  std::ostringstream text;
  if (c.format == "csv") {
    text << "n,order,j,two_j,quoted_constant,residual\n";
    for (const auto& row : rows) {
      const auto z = first_zero(bessel_order_for_dimension(row.n));
      text << row.n << ',' << format_real(z.order) << ',' << format_real(z.value) << ','
           << format_real(2.0 * z.value) << ',' << format_real(row.quoted) << ','
           << format_real(z.residual) << '\n';
    }
  } else {
    nlohmann::json table = nlohmann::json::array();
    for (const auto& row : rows) {
      const auto z = first_zero(bessel_order_for_dimension(row.n));
      table.push_back({{"n", row.n},
                       {"order", round_significant(z.order)},
                       {"j", round_significant(z.value)},
                       {"two_j", round_significant(2.0 * z.value)},
                       {"quoted_constant", round_significant(row.quoted)},
                       {"two_j_at_least_quoted", 2.0 * z.value >= row.quoted * (1 - 1e-15)},
                       {"residual", round_significant(z.residual)}});
    }
    text << nlohmann::json{{"bessel_zeros", table}}.dump(2) << '\n';
  }
  emit(c, text.str(), out);
  return kOk;
}

int cmd_dump_spec(const RunConfig& c, std::ostream& out) {
  const Domain domain = resolve_domain(c.domain_spec);
  emit(c, dump_domain_spec(domain) + "\n", out);
  return kOk;
}

struct SweepItem {
  std::string parameter;
  double sort_key = 0.0;
  std::function<Domain()> make;
};

int cmd_sweep(const RunConfig& c, const SweepConfig& s, std::ostream& out) {
  validate(c);
  std::vector<SweepItem> items;
  if (s.family == "rectangle-aspect" || s.family == "ellipse-aspect") {
    for (double a : s.values) {
      if (!(a > 0)) throw InputError("sweep aspect values must be positive");
      SweepItem item{format_real(a), a, nullptr};
      if (s.family == "rectangle-aspect")
        item.make = [a] { return Domain::box({0.0, 0.0}, {a, 1.0}); };
      else
        item.make = [a] { return Domain::ellipse({a, 1.0}); };
      items.push_back(std::move(item));
    }
    std::stable_sort(items.begin(), items.end(),
                     [](const auto& x, const auto& y) { return x.sort_key < y.sort_key; });
  } else if (s.family == "mask-batch") {
    if (s.dir.empty() || !fs::is_directory(s.dir))
      throw InputError("--dir must name an existing directory for mask-batch");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(s.dir))
      if (entry.is_regular_file() && entry.path().extension() == ".json")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files)
      items.push_back({f.filename().string(), 0.0, [f] { return load_domain_spec(f); }});
  } else {
    throw InputError("unknown sweep family \"" + s.family +
                     "\" (rectangle-aspect, ellipse-aspect, mask-batch)");
  }

  const std::string header = report_csv_header();
  const auto columns = static_cast<std::size_t>(std::count(header.begin(), header.end(), ',')) + 1;

  struct Outcome {
    std::string row;
    bool pass = true;
  };
  std::vector<std::future<Outcome>> jobs;
  for (const auto& item : items)
    jobs.push_back(std::async(std::launch::async, [&c, &item, columns] {
      try {
        const Domain domain = item.make();
        const auto study = study_for(domain, c);
        const auto report = report_for(domain, study, c);
        return Outcome{report_csv_row(report) + ",", report.all_pass()};
      } catch (const std::exception& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), ',', ';');
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        return Outcome{std::string(columns - 1, ',') + ",error: " + msg, true};
      }
    }));

  std::ostringstream text;
  text << "family,parameter," << header << ",error\n";
  bool all_pass = true;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Outcome o = jobs[i].get();
    all_pass = all_pass && o.pass;
    text << s.family << ',' << items[i].parameter << ',' << o.row << '\n';
  }
  emit(c, text.str(), out);
  return all_pass ? kOk : kBoundViolation;
}

void add_run_options(CLI::App* cmd, RunConfig& c, bool with_hbar) {
  cmd->add_option("--domain", c.domain_spec, "Domain spec: inline JSON or a file path")
      ->required();
  cmd->add_option("--h-start", c.h_start, "Coarsest grid spacing (default: from the domain)");
  cmd->add_option("--levels", c.levels, "Refinement levels (>= 3)");
  cmd->add_option("--tol", c.tol, "Relative eigen-residual tolerance");
  if (with_hbar) cmd->add_option("--hbar", c.hbar, "Reduced Planck constant");
  cmd->add_option("--format", c.format, "Artifact format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", c.out_path, "Write the artifact to this file instead of stdout");
  cmd->add_option("--dump-spec", c.dump_spec_path, "Also write the canonical domain spec here");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"First Dirichlet eigenvalues and uncertainty bounds on compact domains",
               "isobound"};
  app.require_subcommand(1);

  RunConfig lambda1_cfg, certify_cfg, bessel_cfg, sweep_cfg, dump_cfg;
  SweepConfig sweep;

  auto* lambda1 = app.add_subcommand("lambda1", "Extrapolated first Dirichlet eigenvalue");
  add_run_options(lambda1, lambda1_cfg, false);
  lambda1->add_option("--dump-matrix", lambda1_cfg.dump_matrix_path,
                      "Write the finest operator as 'i j value' triplets");

  auto* certify = app.add_subcommand("certify", "Full uncertainty-bound report");
  add_run_options(certify, certify_cfg, true);

  auto* bessel = app.add_subcommand("bessel-zeros", "First Bessel zeros for n = 1, 2, 3");
  bessel->add_option("--format", bessel_cfg.format)->check(CLI::IsMember({"json", "csv"}));
  bessel->add_option("--out", bessel_cfg.out_path);

  auto* sweep_cmd = app.add_subcommand("sweep", "Certify a family of shapes, one CSV row each");
  sweep_cmd->add_option("--family", sweep.family, "rectangle-aspect | ellipse-aspect | mask-batch")
      ->required();
  sweep_cmd->add_option("--values", sweep.values, "Aspect ratios")->delimiter(',');
  sweep_cmd->add_option("--dir", sweep.dir, "Directory of domain specs (mask-batch)");
  sweep_cmd->add_option("--h-start", sweep_cfg.h_start);
  sweep_cmd->add_option("--levels", sweep_cfg.levels);
  sweep_cmd->add_option("--tol", sweep_cfg.tol);
  sweep_cmd->add_option("--hbar", sweep_cfg.hbar);
  sweep_cmd->add_option("--out", sweep_cfg.out_path);

  auto* dump = app.add_subcommand("dump-spec", "Print the canonical form of a domain spec");
  dump->add_option("--domain", dump_cfg.domain_spec)->required();
  dump->add_option("--out", dump_cfg.out_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (lambda1->parsed()) return cmd_lambda1(lambda1_cfg, out);
    if (certify->parsed()) return cmd_certify(certify_cfg, out, err);
    if (bessel->parsed()) return cmd_bessel_zeros(bessel_cfg, out);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_cfg, sweep, out);
    if (dump->parsed()) return cmd_dump_spec(dump_cfg, out);
  } catch (const SolverError& e) {
    err << "error: " << e.what() << '\n';
    return kSolverFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace isobound::cli
