// qng: command-line front end for the non-Gaussianity measures.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qng/entanglement.hpp"
#include "qng/error.hpp"
#include "qng/gaussian_ref.hpp"
#include "qng/measures.hpp"
#include "qng/report_io.hpp"
#include "qng/states.hpp"

namespace {

using namespace qng;

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitBoundFail = 4;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const char* kSpecGrammar = R"(State specs:
  vacuum                 Fock vacuum
  fock:N                 Fock state |N>
  pacs:GAMMA             phase-averaged coherent state
  evencat:GAMMA          even cat |g> + |-g>
  oddcat:GAMMA           odd cat |g> - |-g>
  noisy1:F               (1-F)|0><0| + F|1><1|
  pnes:F                 sqrt(1-F)|00> + sqrt(F)|11>
  pstmsv:S[:PHI]         a1 a2 S12(S e^{i PHI})|00>, normalized
  ecs:GAMMA              |g,g> - |-g,-g>, normalized
  randpure:NMAX[:seed=K] real Gaussian amplitudes on levels 0..NMAX
  randmixed:NMAX[:seed=K] mixture of two random pure states
  coherent:ALPHA  squeezed:R  thermal:NBAR  tmsv:S   Gaussian references
Environment: QNG_CUTOFF, QNG_GRID_POINTS, QNG_SEED, QNG_TOL, QNG_FORMAT, QNG_OUT
override the defaults of the matching flags; QNG_LOG=quiet|warn|info|debug.
Exit codes: 0 success, 2 usage, 3 numeric failure, 4 bound check failed.)";

struct RunConfig {
  std::string command;
  int cutoff = 0;  // 0: family default
  int grid_points = 4096;
  std::uint64_t seed = 1;
  double tol = 0.0;  // 0: optimizer defaults
  std::string format = "json";
  std::string out;

  OptimizerOptions options() const {
    OptimizerOptions o;
    o.grid_points = grid_points;
    if (tol > 0.0) {
      o.phase_tolerance = tol;
      o.simplex_tolerance = tol;
    }
    return o;
  }
  int cutoff_for(const StateSpec& spec) const { return cutoff > 0 ? cutoff : default_cutoff(spec); }
};

Json provenance(const RunConfig& c) {
  const OptimizerOptions o = c.options();
  Json j;
  j["command"] = c.command;
  j["cutoff"] = c.cutoff > 0 ? Json(c.cutoff) : Json("family default");
  j["grid_points"] = c.grid_points;
  j["tail_tolerance"] = json_number(kTailTolerance);
  j["phase_tolerance"] = json_number(o.phase_tolerance);
  j["simplex_tolerance"] = json_number(o.simplex_tolerance);
  j["phase_samples"] = o.phase_samples;
  j["theta_samples"] = o.theta_samples;
  j["phi_samples"] = o.phi_samples;
  j["simplex_starts"] = o.simplex_starts;
  j["seed"] = c.seed;
  j["format"] = c.format;
  return j;
}

class Output {
 public:
  Output(const RunConfig& c, const std::vector<std::string>& argv) {
    if (c.out.empty()) return;
    file_ = std::make_unique<std::ofstream>(c.out);
    if (!*file_) throw UsageError("cannot open output file " + c.out);
    // timestamps live in a sidecar so the main output stays byte-identical
    std::ofstream meta(c.out + ".meta.json");
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    Json j;
    j["created"] = stamp;
    j["argv"] = argv;
    meta << j.dump(2) << '\n';
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void add_common(CLI::App* app, RunConfig& c) {
  app->add_option("--cutoff", c.cutoff, "Fock cutoff per mode (0: family default)")->envname("QNG_CUTOFF");
  app->add_option("--grid-points", c.grid_points, "quadrature grid intervals, a power of two >= 256")
      ->envname("QNG_GRID_POINTS");
  app->add_option("--seed", c.seed, "base seed")->envname("QNG_SEED");
  app->add_option("--tol", c.tol, "optimizer parameter tolerance (0: defaults 1e-6 phase, 1e-5 simplex)")
      ->envname("QNG_TOL");
  app->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->envname("QNG_FORMAT");
  app->add_option("--out", c.out, "output file (default stdout)")->envname("QNG_OUT");
}

StateSpec parse_spec_or_usage(const std::string& text) {
  try {
    return parse_state_spec(text);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

// ---- measure

int cmd_measure(const RunConfig& c, const std::string& spec_text, Output& out) {
  const StateSpec spec = parse_spec_or_usage(spec_text);
  MeasureReport r = measure(spec, c.cutoff_for(spec), c.options());
  if (c.format == "csv") {
    write_measure_csv_header(out.stream());
    write_measure_csv_row(out.stream(), r);
  } else {
    Json j = to_json(r);
    j["run"] = provenance(c);
    out.stream() << j.dump(2) << '\n';
  }
  return 0;
}

// ---- scan

const std::vector<std::string>& scan_quantities() {
  static const std::vector<std::string> q{"nkl",        "nqr",         "genoni",      "nhs_exact",  "nhs_lower",
                                          "j_kmax",     "j_kmin",      "kurtosis_estimate", "augmented_estimate",
                                          "overlap_ratio", "overlap_bound", "ur_lhs", "ur_rhs", "s1", "s2",
                                          "s2_gaussian"};
  return q;
}

std::map<std::string, double> evaluate(const FockState& state, const std::vector<std::string>& wanted,
                                       const OptimizerOptions& o) {
  auto want = [&](std::initializer_list<const char*> names) {
    for (const auto& w : wanted)
      for (const char* n : names)
        if (w == n) return true;
    return false;
  };
  std::map<std::string, double> v;
  const double nan = std::nan("");
  const bool single = state.modes() == 1;
  double nkl = nan, nqr = nan;
  if (want({"nkl", "nhs_lower", "nhs_exact", "ur_lhs", "ur_rhs"})) nkl = n_kl(state, o).value;
  if (want({"nqr", "overlap_ratio", "overlap_bound"})) nqr = n_qr(state);
  v["nkl"] = nkl;
  v["nqr"] = nqr;
  if (want({"genoni"})) v["genoni"] = genoni_lower(state);
  if (want({"nhs_exact", "nhs_lower"})) {
    const HilbertSchmidt hs = n_hs(state, nkl);
    v["nhs_exact"] = hs.exact.value_or(nan);
    v["nhs_lower"] = hs.lower;
  }
  if (want({"j_kmax", "j_kmin", "kurtosis_estimate", "augmented_estimate"})) {
    const KurtosisEstimate k = kurtosis_strategy(state, o);
    v["j_kmax"] = k.j_at_kmax;
    v["j_kmin"] = k.j_at_kmin;
    v["kurtosis_estimate"] = k.estimate;
    v["augmented_estimate"] = k.augmented_estimate;
  }
  if (want({"overlap_ratio", "overlap_bound"})) {
    const OverlapBound ob = single ? overlap_bound(state, nqr) : OverlapBound{nan, nan};
    v["overlap_ratio"] = ob.ratio;
    v["overlap_bound"] = ob.bound;
  }
  if (want({"ur_lhs", "ur_rhs"})) {
    const UncertaintyCheck u = single ? uncertainty_check(state, nkl) : UncertaintyCheck{nan, nan};
    v["ur_lhs"] = u.lhs;
    v["ur_rhs"] = u.rhs;
  }
  if (want({"s1"})) v["s1"] = von_neumann_entropy(state);
  if (want({"s2"})) v["s2"] = renyi2_entropy(state);
  if (want({"s2_gaussian"})) {
    double s2g = 0.0;
    for (double nu : symplectic_eigenvalues(covariance(state)).nus) s2g += std::log(2.0 * nu);
    v["s2_gaussian"] = s2g;
  }
  return v;
}

struct ScanArgs {
  std::string family;
  double from = 0.0, to = 1.0;
  int steps = 11;
  bool energy = false;
  double varphi = 0.0;
  std::vector<std::string> quantities{"nkl"};
};

StateSpec scan_spec(const ScanArgs& a, double x, std::uint64_t seed) {
  StateSpec spec = parse_spec_or_usage(a.family == "vacuum" ? "vacuum" : a.family + ":1");
  if (a.energy) {
    if (spec.family != Family::EvenCat && spec.family != Family::OddCat)
      throw UsageError("--energy is supported for evencat and oddcat");
    x = cat_gamma_for_energy(x, spec.family == Family::EvenCat);
  }
  spec.a = x;
  if (spec.family == Family::Fock || spec.family == Family::RandomPure || spec.family == Family::RandomMixed)
    spec.a = std::round(x);
  if (spec.family == Family::PhotonSubtractedTmsv) spec.b = a.varphi;
  spec.seed = seed;
  try {
    spec.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return spec;
}

int cmd_scan(const RunConfig& c, const ScanArgs& a, Output& out) {
  for (const auto& q : a.quantities)
    if (std::find(scan_quantities().begin(), scan_quantities().end(), q) == scan_quantities().end())
      throw UsageError("unsupported quantity '" + q + "'");
  if (a.steps < 1) throw UsageError("--steps must be >= 1");
  std::vector<double> xs;
  for (int i = 0; i < a.steps; ++i) xs.push_back(a.steps == 1 ? a.from : a.from + (a.to - a.from) * i / (a.steps - 1));
  std::vector<StateSpec> specs;
  for (double x : xs) specs.push_back(scan_spec(a, x, c.seed));

  std::vector<std::map<std::string, double>> rows(xs.size());
  std::vector<double> energy(xs.size());
  const OptimizerOptions o = c.options();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const FockState state = build(specs[i], c.cutoff_for(specs[i]));
    for (int m = 0; m < state.modes(); ++m) energy[i] += state.mean_photon_number(m);
    rows[i] = evaluate(state, a.quantities, o);
  }

  if (c.format == "csv") {
    auto& os = out.stream();
    os << "x,state,mean_photon_number";
    for (const auto& q : a.quantities) os << ',' << q;
    os << '\n';
    for (std::size_t i = 0; i < xs.size(); ++i) {
      os << format_number(xs[i]) << ',' << to_string(specs[i]) << ',' << format_number(energy[i]);
      for (const auto& q : a.quantities) os << ',' << format_number(rows[i].at(q));
      os << '\n';
    }
  } else {
    Json j;
    j["family"] = a.family;
    j["x_is_energy"] = a.energy;
    Json arr = Json::array();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      Json r;
      r["x"] = json_number(xs[i]);
      r["state"] = to_string(specs[i]);
      r["mean_photon_number"] = json_number(energy[i]);
      for (const auto& q : a.quantities) r[q] = json_number(rows[i].at(q));
      arr.push_back(r);
    }
    j["rows"] = arr;
    j["run"] = provenance(c);
    out.stream() << j.dump(2) << '\n';
  }
  return 0;
}

// ---- random-bench

struct BenchArgs {
  int n_max = 5;
  int samples = 1000;
  bool mixed = false;
  bool augmented = false;
};

int cmd_random_bench(const RunConfig& c, const BenchArgs& a, Output& out) {
  if (a.samples < 100) throw UsageError("random-bench needs at least 100 samples");
  RandomBenchConfig cfg;
  cfg.n_max = a.n_max;
  cfg.samples = a.samples;
  cfg.seed = c.seed;
  cfg.mixed = a.mixed;
  cfg.options = c.options();
  std::vector<RandomBenchSample> samples;
  const RandomBenchSummary s = random_bench(cfg, &samples);
  if (c.format == "csv") {
    auto& os = out.stream();
    os << "seed,nkl,phi_opt,phi_kmax,phi_kmin,delta,ratio" << (a.augmented ? ",augmented_ratio" : "") << '\n';
    for (const auto& r : samples) {
      os << r.seed << ',' << format_number(r.nkl) << ',' << format_number(r.phi_opt) << ','
         << format_number(r.phi_kmax) << ',' << format_number(r.phi_kmin) << ',' << format_number(r.delta) << ','
         << format_number(r.ratio);
      if (a.augmented) os << ',' << format_number(r.augmented_ratio);
      os << '\n';
    }
  } else {
    Json j;
    j["n_max"] = a.n_max;
    j["mixed"] = a.mixed;
    Json summary = to_json(s);
    if (!a.augmented) summary.erase("mean_augmented_ratio");
    j["summary"] = summary;
    j["run"] = provenance(c);
    out.stream() << j.dump(2) << '\n';
  }
  return 0;
}

// ---- bounds-check

struct BoundRow {
  std::string suite, state, inequality;
  double lhs, rhs, margin;
  bool pass;
};

std::vector<BoundRow> bound_rows(const RunConfig& c, const std::string& suite) {
  static const std::vector<std::string> suites{"all", "ordering", "hs", "overlap", "uncertainty", "appendix"};
  if (std::find(suites.begin(), suites.end(), suite) == suites.end()) throw UsageError("unknown suite '" + suite + "'");
  auto on = [&](const char* s) { return suite == "all" || suite == s; };
  const OptimizerOptions o = c.options();
  std::vector<BoundRow> rows;
  auto add = [&](const char* s, const std::string& state, const char* ineq, double lhs, double rhs, double tol) {
    // every inequality is written lhs >= rhs
    rows.push_back({s, state, ineq, lhs, rhs, lhs - rhs, lhs - rhs >= -tol});
  };
  if (on("ordering") || on("hs") || on("overlap") || on("uncertainty")) {
    for (const StateSpec& spec : catalog_sweep()) {
      const FockState state = build(spec, c.cutoff_for(spec));
      const std::string name = to_string(spec);
      const double nkl = n_kl(state, o).value;
      const double nqr = n_qr(state);
      if (on("ordering")) {
        add("ordering", name, "nqr >= nkl", nqr, nkl, 1e-6);
        add("ordering", name, "nqr >= genoni_lower", nqr, genoni_lower(state), 1e-6);
      }
      if (state.modes() != 1) continue;
      if (on("hs")) {
        const HilbertSchmidt hs = n_hs(state, nkl);
        add("hs", name, "nhs_exact >= nhs_lower", *hs.exact, hs.lower, 1e-9);
      }
      if (on("overlap")) {
        const OverlapBound ob = overlap_bound(state, nqr);
        add("overlap", name, "bound >= overlap_ratio", ob.bound, ob.ratio, 1e-6);
      }
      if (on("uncertainty")) {
        const UncertaintyCheck u = uncertainty_check(state, nkl);
        add("uncertainty", name, "sqrt(det Gamma) >= h^-1(nkl + S1)", u.lhs, u.rhs, 1e-6);
      }
    }
  }
  if (on("appendix")) {
    const double floor = std::log(2.0 / std::numbers::e);
    double prev = -1.0;
    for (int i = 0; i < 40; ++i) {
      const double nbar = std::pow(10.0, -3.0 + 6.0 * i / 39.0);
      const std::string name = "thermal:" + format_number(nbar);
      add("appendix", name, "S2 - S1 >= ln(2/e)", gaussian_entropy_gap({{nbar + 0.5}}), floor, 1e-12);
      const double d = thermal_entropy_difference(nbar);
      if (i > 0) add("appendix", name, "D(nbar) > D(previous)", d, prev, -1e-300);
      prev = d;
    }
  }
  return rows;
}

int cmd_bounds_check(const RunConfig& c, const std::string& suite, Output& out) {
  const auto rows = bound_rows(c, suite);
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.pass;
  if (c.format == "csv") {
    auto& os = out.stream();
    os << "suite,state,inequality,lhs,rhs,margin,result\n";
    for (const auto& r : rows)
      os << r.suite << ',' << r.state << ',' << r.inequality << ',' << format_number(r.lhs) << ','
         << format_number(r.rhs) << ',' << format_number(r.margin) << ',' << (r.pass ? "PASS" : "FAIL") << '\n';
  } else {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json e;
      e["suite"] = r.suite;
      e["state"] = r.state;
      e["inequality"] = r.inequality;
      e["lhs"] = json_number(r.lhs);
      e["rhs"] = json_number(r.rhs);
      e["margin"] = json_number(r.margin);
      e["result"] = r.pass ? "PASS" : "FAIL";
      arr.push_back(e);
    }
    Json j;
    j["rows"] = arr;
    j["all_pass"] = ok;
    j["run"] = provenance(c);
    out.stream() << j.dump(2) << '\n';
  }
  return ok ? 0 : kExitBoundFail;
}

// ---- witness

struct WitnessArgs {
  double from = 0.5, to = 1.2;
  int steps = 15;
  double tolerance = 1e-4;
};

int cmd_witness(const RunConfig& c, const WitnessArgs& a, Output& out) {
  if (a.steps < 2) throw UsageError("--steps must be >= 2");
  if (!(a.from > 0.0) || !(a.to > a.from)) throw UsageError("need 0 < --from < --to");
  std::vector<double> gammas;
  for (int i = 0; i < a.steps; ++i) gammas.push_back(a.from + (a.to - a.from) * i / (a.steps - 1));
  const OptimizerOptions o = c.options();
  const auto points = witness_scan(gammas, o);
  std::optional<double> threshold;
  bool detects = false;
  try {
    threshold = witness_threshold(points, o, a.tolerance);
  } catch (const NoThreshold& e) {
    detects = e.detects();
    std::cerr << "qng: " << e.what() << '\n';
  }
  if (c.format == "csv") {
    write_witness_csv(out.stream(), points);
    if (threshold) std::cerr << "threshold gamma = " << format_number(*threshold) << '\n';
  } else {
    Json j;
    j["threshold"] = threshold ? json_number(*threshold) : Json(nullptr);
    if (!threshold) j["detects_everywhere"] = detects;
    Json arr = Json::array();
    for (const auto& p : points) arr.push_back(to_json(p));
    j["points"] = arr;
    j["run"] = provenance(c);
    out.stream() << j.dump(2) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadrature-based non-Gaussianity measures for one- and two-mode states"};
  app.footer(kSpecGrammar);
  app.require_subcommand(1);
  RunConfig cfg;

  std::string spec_text;
  auto* measure_cmd = app.add_subcommand("measure", "full report for one state");
  measure_cmd->add_option("spec", spec_text, "state spec, e.g. fock:1 or evencat:1.2")->required();
  add_common(measure_cmd, cfg);

  ScanArgs scan;
  std::string quantities = "nkl";
  auto* scan_cmd = app.add_subcommand("scan", "sweep one family parameter");
  scan_cmd->add_option("family", scan.family, "family name (fock, pacs, evencat, ...)")->required();
  scan_cmd->add_option("--from", scan.from, "first parameter value");
  scan_cmd->add_option("--to", scan.to, "last parameter value");
  scan_cmd->add_option("--steps", scan.steps, "number of values");
  scan_cmd->add_flag("--energy", scan.energy, "parameter values are mean photon numbers (cats)");
  scan_cmd->add_option("--varphi", scan.varphi, "squeezing phase for pstmsv");
  scan_cmd->add_option("--quantities", quantities,
                       "comma list: nkl,nqr,genoni,nhs_exact,nhs_lower,j_kmax,j_kmin,kurtosis_estimate,"
                       "augmented_estimate,overlap_ratio,overlap_bound,ur_lhs,ur_rhs,s1,s2,s2_gaussian");
  add_common(scan_cmd, cfg);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("random-bench", "kurtosis strategy on random states");
  bench_cmd->add_option("--n-max", bench.n_max, "highest Fock level of the random states");
  bench_cmd->add_option("--samples", bench.samples, "number of random states (>= 100)");
  bench_cmd->add_flag("--mixed", bench.mixed, "draw mixtures of two random pure states");
  bench_cmd->add_flag("--augmented", bench.augmented, "also report the variance-augmented candidates");
  add_common(bench_cmd, cfg);

  std::string suite = "all";
  auto* bounds_cmd = app.add_subcommand("bounds-check", "verify the inequalities on the catalog");
  bounds_cmd->add_option("--suite", suite, "all, ordering, hs, overlap, uncertainty or appendix");
  add_common(bounds_cmd, cfg);

  WitnessArgs wit;
  auto* witness_cmd = app.add_subcommand("witness", "entanglement witness sweep for entangled coherent states");
  witness_cmd->add_option("--from", wit.from, "first gamma");
  witness_cmd->add_option("--to", wit.to, "last gamma");
  witness_cmd->add_option("--steps", wit.steps, "number of gamma values");
  witness_cmd->add_option("--bisection-tol", wit.tolerance, "threshold bracket width");
  add_common(witness_cmd, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  std::vector<std::string> args(argv, argv + argc);
  try {
    cfg.command = app.get_subcommands().front()->get_name();
    Output out(cfg, args);
    if (measure_cmd->parsed()) return cmd_measure(cfg, spec_text, out);
    if (scan_cmd->parsed()) {
      scan.quantities.clear();
      std::stringstream ss(quantities);
      for (std::string q; std::getline(ss, q, ',');)
        if (!q.empty()) scan.quantities.push_back(q);
      return cmd_scan(cfg, scan, out);
    }
    if (bench_cmd->parsed()) return cmd_random_bench(cfg, bench, out);
    if (bounds_cmd->parsed()) return cmd_bounds_check(cfg, suite, out);
    if (witness_cmd->parsed()) return cmd_witness(cfg, wit, out);
  } catch (const UsageError& e) {
    std::cerr << "qng: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  } catch (const qng::Error& e) {
    std::cerr << "qng: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}
