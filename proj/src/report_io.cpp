#include "qng/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "qng/entanglement.hpp"

namespace qng {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json json_number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::stod(format_number(x));
}

namespace {

Json numbers(const std::vector<double>& xs) {
  Json a = Json::array();
  for (double x : xs) a.push_back(json_number(x));
  return a;
}

template <typename T>
Json optional_number(const std::optional<T>& v) {
  return v ? json_number(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const QuadratureDirection& direction) {
  Json j;
  j["thetas"] = numbers(direction.thetas());
  j["phis"] = numbers(direction.phis());
  return j;
}

Json to_json(const NklResult& nkl) {
  Json j;
  j["value"] = json_number(nkl.value);
  j["raw"] = json_number(nkl.raw);
  j["direction"] = to_json(nkl.direction);
  j["coarse_value"] = json_number(nkl.coarse_value);
  j["refined_values"] = numbers(nkl.refined_values);
  j["evaluations"] = nkl.evaluations;
  j["iterations"] = nkl.iterations;
  j["multimodal"] = nkl.multimodal;
  j["converged"] = nkl.converged;
  return j;
}

Json to_json(const KurtosisEstimate& k) {
  Json j;
  j["dir_kmax"] = to_json(k.dir_kmax);
  j["dir_kmin"] = to_json(k.dir_kmin);
  j["kmax"] = json_number(k.kmax);
  j["kmin"] = json_number(k.kmin);
  j["j_at_kmax"] = json_number(k.j_at_kmax);
  j["j_at_kmin"] = json_number(k.j_at_kmin);
  j["estimate"] = json_number(k.estimate);
  j["rotationally_symmetric"] = k.rotationally_symmetric;
  if (k.phi_vmax) {
    j["phi_vmax"] = json_number(*k.phi_vmax);
    j["phi_vmin"] = optional_number(k.phi_vmin);
    j["j_at_vmax"] = json_number(k.j_at_vmax);
    j["j_at_vmin"] = json_number(k.j_at_vmin);
  }
  j["augmented_estimate"] = json_number(k.augmented_estimate);
  return j;
}

Json to_json(const Provenance& p) {
  Json j;
  j["cutoff"] = p.cutoff;
  j["grid_points"] = p.grid_points;
  j["tail_tolerance"] = json_number(p.tail_tolerance);
  j["phase_tolerance"] = json_number(p.phase_tolerance);
  j["simplex_tolerance"] = json_number(p.simplex_tolerance);
  j["seed"] = p.seed;
  return j;
}

Json to_json(const MeasureReport& r) {
  Json j;
  j["state"] = r.state;
  j["modes"] = r.modes;
  j["mean_photon_number"] = json_number(r.mean_photon_number);
  j["nkl"] = to_json(r.nkl);
  j["kurtosis"] = to_json(r.kurtosis);
  j["nqr"] = json_number(r.nqr);
  j["nhs_exact"] = optional_number(r.nhs_exact);
  j["nhs_lower"] = json_number(r.nhs_lower);
  j["genoni_lower"] = optional_number(r.genoni_lower);
  if (r.overlap) {
    j["overlap_ratio"] = json_number(r.overlap->ratio);
    j["overlap_bound"] = json_number(r.overlap->bound);
  } else {
    j["overlap_ratio"] = nullptr;
    j["overlap_bound"] = nullptr;
  }
  if (r.uncertainty) {
    j["ur_lhs"] = json_number(r.uncertainty->lhs);
    j["ur_rhs"] = json_number(r.uncertainty->rhs);
  } else {
    j["ur_lhs"] = nullptr;
    j["ur_rhs"] = nullptr;
  }
  j["provenance"] = to_json(r.provenance);
  return j;
}

Json to_json(const RandomBenchSummary& s) {
  Json j;
  j["samples"] = s.samples;
  j["mean_ratio"] = json_number(s.mean_ratio);
  j["mean_augmented_ratio"] = json_number(s.mean_augmented_ratio);
  j["share_ratio_above_0.95"] = json_number(s.share_ratio_high);
  j["share_delta_below_pi_100"] = json_number(s.share_delta_small);
  j["share_exact_hits"] = json_number(s.share_exact);
  j["delta_bin_width"] = json_number(s.delta_bin_width);
  j["delta_histogram"] = s.delta_histogram;
  j["ratio_bin_width"] = json_number(s.ratio_bin_width);
  j["ratio_histogram"] = s.ratio_histogram;
  return j;
}

Json to_json(const WitnessReport& w) {
  Json j;
  j["gamma"] = json_number(w.gamma_parameter);
  j["lhs"] = json_number(w.lhs);
  j["rhs"] = json_number(w.rhs);
  j["decisive_mode"] = w.decisive_mode + 1;
  j["ppt_nu_min"] = json_number(w.ppt_nu_min);
  j["gaussian_ppt_detects"] = w.gaussian_ppt_detects;
  j["enhanced_detects"] = w.enhanced_detects;
  Json modes = Json::array();
  for (const auto& m : w.modes) {
    Json e;
    e["sqrt_det"] = json_number(m.sqrt_det);
    e["lhs"] = json_number(m.lhs);
    e["rhs"] = json_number(m.rhs);
    e["unphysical_by_covariance"] = m.unphysical_by_covariance;
    e["unphysical_by_density"] = m.unphysical_by_density;
    modes.push_back(e);
  }
  j["modes"] = modes;
  return j;
}

const std::vector<std::string>& measure_csv_columns() {
  static const std::vector<std::string> cols{
      "state",         "mean_photon_number", "nkl",         "nkl_theta",    "nkl_phi1",     "nkl_phi2",
      "nkl_multimodal", "kurtosis_estimate", "j_at_kmax",   "j_at_kmin",    "augmented_estimate", "nqr",
      "nhs_exact",     "nhs_lower",          "genoni_lower", "overlap_ratio", "overlap_bound", "ur_lhs",
      "ur_rhs",        "cutoff",             "grid_points"};
  return cols;
}

void write_measure_csv_header(std::ostream& os) {
  const auto& cols = measure_csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << '\n';
}

void write_measure_csv_row(std::ostream& os, const MeasureReport& r) {
  const double nan = std::nan("");
  const auto& d = r.nkl.direction;
  const double theta = d.thetas().empty() ? nan : d.thetas()[0];
  const double phi2 = d.phis().size() > 1 ? d.phis()[1] : nan;
  auto opt = [&](const std::optional<double>& v) { return format_number(v ? *v : nan); };
  os << r.state << ',' << format_number(r.mean_photon_number) << ',' << format_number(r.nkl.value) << ','
     << format_number(theta) << ',' << format_number(d.phis()[0]) << ',' << format_number(phi2) << ','
     << (r.nkl.multimodal ? 1 : 0) << ',' << format_number(r.kurtosis.estimate) << ','
     << format_number(r.kurtosis.j_at_kmax) << ',' << format_number(r.kurtosis.j_at_kmin) << ','
     << format_number(r.kurtosis.augmented_estimate) << ',' << format_number(r.nqr) << ',' << opt(r.nhs_exact) << ','
     << format_number(r.nhs_lower) << ',' << opt(r.genoni_lower) << ','
     << format_number(r.overlap ? r.overlap->ratio : nan) << ',' << format_number(r.overlap ? r.overlap->bound : nan)
     << ',' << format_number(r.uncertainty ? r.uncertainty->lhs : nan) << ','
     << format_number(r.uncertainty ? r.uncertainty->rhs : nan) << ',' << r.provenance.cutoff << ','
     << r.provenance.grid_points << '\n';
}

}  // namespace qng
