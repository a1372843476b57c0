#include "isobound/report_io.hpp"

#include <sstream>

#include "isobound/format.hpp"
#include "json.hpp"

namespace isobound {

namespace {

using nlohmann::json;

json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round_significant(v);
}

json opt(const std::optional<double>& v) { return v ? num(*v) : json(nullptr); }

json metric(const MetricValue& m) {
  return {{"value", num(m.value)},
          {"exactness", std::string(to_string(m.exactness))},
          {"error_bound", num(m.error_bound)}};
}

json metrics_json(const DomainMetrics& m) {
  json out = {{"dim", m.dim},
              {"volume", metric(m.volume)},
              {"diameter", metric(m.diameter)},
              {"connected", m.connected}};
  out["perimeter"] = m.perimeter ? metric(*m.perimeter) : json(nullptr);
  out["simply_connected"] = m.simply_connected ? json(*m.simply_connected) : json(nullptr);
  out["isoperimetric_deficit"] = opt(m.isoperimetric_deficit());
  return out;
}

json study_json(const ConvergenceStudy& s) {
  json levels = json::array();
  for (std::size_t i = 0; i < s.spacings.size(); ++i) {
    json row = {{"h", num(s.spacings[i])}, {"lambda1", num(s.lambda1_values[i])}};
    row["points"] = i < s.point_counts.size() ? json(s.point_counts[i]) : json(nullptr);
    row["diff"] = i > 0 ? num(s.differences[i - 1]) : json(nullptr);
    row["extrapolant"] = i > 0 ? num(s.extrapolants[i - 1]) : json(nullptr);
    levels.push_back(row);
  }
  return {{"levels", levels},
          {"observed_order", num(s.observed_order)},
          {"extrapolation_order", num(s.extrapolation_order)},
          {"extrapolated", num(s.extrapolated)},
          {"error_estimate", num(s.error_estimate)},
          {"monotone", s.monotone}};
}

std::string csv_opt(const std::optional<double>& v) { return v ? format_real(*v) : ""; }

}  // namespace

std::string metrics_to_json(const DomainMetrics& metrics) { return metrics_json(metrics).dump(2); }

std::string study_to_json(const ConvergenceStudy& study) { return study_json(study).dump(2); }

std::string report_to_json(const UncertaintyReport& r, const ConvergenceStudy* study) {
  json margins = {{"rayleigh", num(r.margins.rayleigh)},
                  {"krahn", num(r.margins.krahn)},
                  {"diameter", num(r.margins.diameter)},
                  {"interval", opt(r.margins.interval)},
                  {"kennard", opt(r.margins.kennard)}};
  json flags = {{"rayleigh", r.equality_flags.rayleigh},
                {"krahn", r.equality_flags.krahn},
                {"diameter", r.equality_flags.diameter}};
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"margin", num(c.margin)},
                      {"tolerance", num(c.tolerance)},
                      {"pass", c.pass},
                      {"equality", c.equality}});
  json mean_p = json::array();
  for (double p : r.mean_p) mean_p.push_back(num(p));

  json out = {{"domain", {{"kind", std::string(to_string(r.kind))}, {"dim", r.dim}}},
              {"hbar", num(r.hbar)},
              {"lambda1", num(r.lambda1)},
              {"lambda1_error", num(r.lambda1_error)},
              {"lambda1_discrete", num(r.lambda1_discrete)},
              {"sigma_p", num(r.sigma_p)},
              {"sigma_p_continuum", num(r.sigma_p_continuum)},
              {"sigma_x", opt(r.sigma_x)},
              {"mean_p", mean_p},
              {"metrics", metrics_json(r.metrics)},
              {"bessel_zero", num(r.bessel_zero)},
              {"krahn_ratio", num(r.krahn_ratio)},
              {"diameter_product", num(r.diameter_product)},
              {"tolerance_band", num(r.tolerance_band)},
              {"margins", margins},
              {"equality_flags", flags},
              {"checks", checks},
              {"all_pass", r.all_pass()}};
  if (study) out["study"] = study_json(*study);
  return out.dump(2);
}

std::string lambda1_to_json(const Domain& domain, const ConvergenceStudy& study, double tol) {
  json out = {{"domain", {{"kind", std::string(to_string(domain.kind()))}, {"dim", domain.dim()}}},
              {"h_start", num(study.spacings.front())},
              {"levels", study.spacings.size()},
              {"tol", num(tol)},
              {"lambda1", num(study.extrapolated)},
              {"lambda1_error", num(study.error_estimate)},
              {"study", study_json(study)}};
  return out.dump(2);
}

std::string report_csv_header() {
  return "kind,dim,volume,diameter,perimeter,lambda1,lambda1_error,lambda1_discrete,"
         "sigma_p,sigma_x,krahn_ratio,diameter_product,margin_rayleigh,margin_krahn,"
         "margin_diameter,margin_kennard,equality_diameter,all_pass";
}

std::string report_csv_row(const UncertaintyReport& r) {
  std::ostringstream row;
  row << to_string(r.kind) << ',' << r.dim << ',' << format_real(r.metrics.volume.value) << ','
      << format_real(r.metrics.diameter.value) << ','
      << (r.metrics.perimeter ? format_real(r.metrics.perimeter->value) : "") << ','
      << format_real(r.lambda1) << ',' << format_real(r.lambda1_error) << ','
      << format_real(r.lambda1_discrete) << ',' << format_real(r.sigma_p) << ','
      << csv_opt(r.sigma_x) << ',' << format_real(r.krahn_ratio) << ','
      << format_real(r.diameter_product) << ',' << format_real(r.margins.rayleigh) << ','
      << format_real(r.margins.krahn) << ',' << format_real(r.margins.diameter) << ','
      << csv_opt(r.margins.kennard) << ',' << (r.equality_flags.diameter ? 1 : 0) << ','
      << (r.all_pass() ? 1 : 0);
  return row.str();
}

}  // namespace isobound
