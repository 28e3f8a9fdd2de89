#include "qng/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>

#include "parallel.hpp"
#include "qng/error.hpp"
#include "qng/gaussian_ref.hpp"
#include "qng/info_theory.hpp"
#include "qng/log.hpp"
#include "qng/optimize.hpp"
#include "qng/rng.hpp"

namespace qng {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  if (r >= period) r -= period;
  return r;
}

struct Candidate {
  double value;
  std::array<double, 3> params;  // (theta, phi1, phi2) or (0, phi, 0)
};

// Larger value first, then lexicographically smaller parameters.
bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.params < b.params;
}

QuadratureDirection to_direction(int modes, const std::array<double, 3>& p) {
  if (modes == 1) return QuadratureDirection::single(p[1]);
  return QuadratureDirection::two_mode(p[0], p[1], p[2]);
}

// Golden-refined extremum of a pi-periodic function: dense scan, then the
// bracket around the best sample.
double periodic_extremum(const std::function<double(double)>& f, bool maximize, int samples = 720) {
  const double step = kPi / samples;
  int best = 0;
  double best_v = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double v = maximize ? f(i * step) : -f(i * step);
    if (i == 0 || v > best_v) {
      best = i;
      best_v = v;
    }
  }
  auto g = [&](double x) { return maximize ? f(x) : -f(x); };
  const auto r = optimize::golden_section_max(g, (best - 1) * step, (best + 1) * step, 1e-10);
  return wrap(r.value >= best_v ? r.x : best * step, kPi);
}

double shannon(const std::vector<double>& p) {
  double s = 0.0;
  for (double v : p)
    if (v > 0.0) s -= v * std::log(v);
  return s;
}

// Seeds for the simplex on the (theta, phi1, phi2) lattice: coarse local
// maxima (within round-off) grouped into connected plateaus, best cell of
// each plateau, best plateaus first. Redundant parameterizations put one
// optimum on many equivalent cells; they collapse into one seed here.
std::vector<Candidate> seed_cells(const std::vector<double>& v, int nt, int np, double dtheta, double dphi, int count) {
  const int n = nt * np * np;
  auto index = [&](int i, int a, int b) { return (i * np + a) * np + b; };
  auto candidate = [&](int c) {
    const int i = c / (np * np), a = (c / np) % np, b = c % np;
    return Candidate{v[static_cast<std::size_t>(c)], {i * dtheta, a * dphi, b * dphi}};
  };
  auto neighbours = [&](int c, auto&& visit) {
    const int i = c / (np * np), a = (c / np) % np, b = c % np;
    for (int di = -1; di <= 1; ++di) {
      const int ii = i + di;
      if (ii < 0 || ii >= nt) continue;
      for (int da = -1; da <= 1; ++da)
        for (int db = -1; db <= 1; ++db) {
          if (di == 0 && da == 0 && db == 0) continue;
          visit(index(ii, (a + da + np) % np, (b + db + np) % np));
        }
    }
  };
  std::vector<char> is_max(static_cast<std::size_t>(n), 1);
  for (int c = 0; c < n; ++c) {
    const double x = v[static_cast<std::size_t>(c)];
    const double tol = 1e-9 * std::max(1.0, std::abs(x));
    neighbours(c, [&](int o) {
      if (v[static_cast<std::size_t>(o)] > x + tol) is_max[static_cast<std::size_t>(c)] = 0;
    });
  }
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<Candidate> seeds;
  for (int c = 0; c < n; ++c) {
    if (!is_max[static_cast<std::size_t>(c)] || label[static_cast<std::size_t>(c)] >= 0) continue;
    std::vector<int> stack{c};
    label[static_cast<std::size_t>(c)] = c;
    Candidate best = candidate(c);
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      const Candidate cc = candidate(cur);
      if (better(cc, best)) best = cc;
      neighbours(cur, [&](int o) {
        if (is_max[static_cast<std::size_t>(o)] && label[static_cast<std::size_t>(o)] < 0) {
          label[static_cast<std::size_t>(o)] = c;
          stack.push_back(o);
        }
      });
    }
    seeds.push_back(best);
  }
  std::sort(seeds.begin(), seeds.end(), better);
  if (static_cast<int>(seeds.size()) > count) seeds.resize(static_cast<std::size_t>(count));
  return seeds;
}

NklResult n_kl_single(const QuadratureEngine& engine, const OptimizerOptions& o) {
  const int n = o.phase_samples;
  const double step = kPi / n;
  std::vector<double> coarse(static_cast<std::size_t>(n));
  detail::parallel_for(n, [&](int i) {
    coarse[static_cast<std::size_t>(i)] = negentropy_at(engine, QuadratureDirection::single(i * step));
  });

  NklResult res;
  res.evaluations = n;
  // local maxima on the circle (J is pi-periodic)
  std::vector<Candidate> peaks;
  for (int i = 0; i < n; ++i) {
    const double v = coarse[static_cast<std::size_t>(i)];
    const double l = coarse[static_cast<std::size_t>((i + n - 1) % n)];
    const double r = coarse[static_cast<std::size_t>((i + 1) % n)];
    if (v >= l && v >= r) peaks.push_back({v, {0.0, i * step, 0.0}});
  }
  std::sort(peaks.begin(), peaks.end(), better);
  res.coarse_value = peaks.empty() ? *std::max_element(coarse.begin(), coarse.end()) : peaks.front().value;
  if (static_cast<int>(peaks.size()) > o.refine_brackets) peaks.resize(static_cast<std::size_t>(o.refine_brackets));

  std::vector<Candidate> refined(peaks.size());
  std::vector<int> evals(peaks.size(), 0);
  detail::parallel_for(static_cast<int>(peaks.size()), [&](int k) {
    const double c = peaks[static_cast<std::size_t>(k)].params[1];
    auto f = [&](double phi) { return negentropy_at(engine, QuadratureDirection::single(phi)); };
    const auto r = optimize::golden_section_max(f, c - step, c + step, o.phase_tolerance);
    Candidate best = peaks[static_cast<std::size_t>(k)];
    if (r.value > best.value) best = {r.value, {0.0, wrap(r.x, kPi), 0.0}};
    refined[static_cast<std::size_t>(k)] = best;
    evals[static_cast<std::size_t>(k)] = r.evaluations;
  });
  for (int e : evals) res.evaluations += e;
  std::sort(refined.begin(), refined.end(), better);
  for (const auto& c : refined) res.refined_values.push_back(c.value);
  res.iterations = static_cast<int>(refined.size());
  if (refined.size() >= 2 && refined[0].value - refined[1].value <= o.multimodal_tolerance) res.multimodal = true;
  const Candidate best = refined.empty() ? Candidate{res.coarse_value, {0.0, 0.0, 0.0}} : refined.front();
  res.raw = best.value;
  res.direction = QuadratureDirection::single(best.params[1]);
  return res;
}

NklResult n_kl_two(const QuadratureEngine& engine, const OptimizerOptions& o) {
  const int nt = o.theta_samples, np = o.phi_samples;
  const double dtheta = nt > 1 ? (kPi / 2.0) / (nt - 1) : 0.0;
  const double dphi = 2.0 * kPi / np;
  // cell (i, j1, j2) <-> (theta_i, phi1 = j1 dphi, phi2 = j2 dphi). A slice at
  // (theta, delta) gives every cell with j1 - j2 = delta / dphi (mod np).
  std::vector<double> coarse(static_cast<std::size_t>(nt) * np * np);
  detail::parallel_for(nt * np, [&](int s) {
    const int i = s / np, dj = s % np;
    const QuadratureEngine slice = engine.network_slice(i * dtheta, dj * dphi);
    for (int j2 = 0; j2 < np; ++j2) {
      const int j1 = (j2 + dj) % np;
      coarse[(static_cast<std::size_t>(i) * np + j1) * np + j2] = negentropy_raw(slice.distribution(j2 * dphi));
    }
  });

  NklResult res;
  res.evaluations = nt * np * np;
  res.coarse_value = *std::max_element(coarse.begin(), coarse.end());
  const std::vector<Candidate> cells = seed_cells(coarse, nt, np, dtheta, dphi, o.simplex_starts);
  const int starts = static_cast<int>(cells.size());

  auto f = [&](const std::vector<double>& p) {
    return negentropy_at(engine, QuadratureDirection::two_mode(p[0], p[1], p[2]));
  };
  const std::vector<double> step{0.5 * (dtheta > 0.0 ? dtheta : 0.1), 0.5 * dphi, 0.5 * dphi};
  std::vector<optimize::SimplexResult> runs(static_cast<std::size_t>(starts));
  detail::parallel_for(starts, [&](int k) {
    const auto& c = cells[static_cast<std::size_t>(k)];
    runs[static_cast<std::size_t>(k)] = optimize::nelder_mead_max(
        f, {c.params[0], c.params[1], c.params[2]}, step, o.simplex_tolerance, o.simplex_max_iterations);
  });

  std::vector<Candidate> refined;
  std::vector<bool> conv;
  for (int k = 0; k < starts; ++k) {
    const auto& r = runs[static_cast<std::size_t>(k)];
    res.evaluations += r.evaluations;
    res.iterations += r.iterations;
    Candidate c{r.value, {r.x[0], wrap(r.x[1], 2.0 * kPi), wrap(r.x[2], 2.0 * kPi)}};
    const auto& start = cells[static_cast<std::size_t>(k)];
    if (start.value > c.value) c = start;  // best so far
    refined.push_back(c);
    conv.push_back(r.converged);
  }
  std::vector<std::size_t> order(refined.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return better(refined[a], refined[b]); });
  for (std::size_t k : order) res.refined_values.push_back(refined[k].value);
  const Candidate& best = refined[order.front()];
  res.converged = conv[order.front()];
  if (!res.converged) log::warn("simplex did not converge; reporting the best point found");
  // distinct optima only: runs that landed on the same point do not count
  if (order.size() >= 2) {
    const Candidate& second = refined[order[1]];
    double sep = 0.0;
    for (int k = 0; k < 3; ++k) sep = std::max(sep, std::abs(best.params[static_cast<std::size_t>(k)] - second.params[static_cast<std::size_t>(k)]));
    if (best.value - second.value <= o.multimodal_tolerance && sep > 100.0 * o.simplex_tolerance) res.multimodal = true;
  }
  res.raw = best.value;
  res.direction = to_direction(2, best.params);
  return res;
}

KurtosisEstimate kurtosis_single(const QuadratureEngine& engine, const FockState& state) {
  // <q_phi^n> at the n + 1 field phases, order by order
  std::array<TrigPolynomial, 4> field;
  for (int n = 1; n <= 4; ++n) {
    const auto phases = moment_field_phases(n);
    std::vector<double> samples;
    for (double phi : phases) samples.push_back(moment(state, QuadratureDirection::single(phi), n));
    field[static_cast<std::size_t>(n - 1)] = reconstruct_moment_field(samples, n);
  }
  auto variance = [&](double phi) {
    const double m1 = field[0](phi);
    return field[1](phi) - m1 * m1;
  };
  auto kurt = [&](double phi) {
    const double m1 = field[0](phi), m2 = field[1](phi), m3 = field[2](phi), m4 = field[3](phi);
    const double var = m2 - m1 * m1;
    const double c4 = m4 - 4.0 * m3 * m1 + 6.0 * m2 * m1 * m1 - 3.0 * m1 * m1 * m1 * m1;
    return c4 / (var * var);
  };
  auto spread = [](const std::function<double(double)>& f) {
    double lo = f(0.0), hi = lo;
    for (int i = 1; i < 720; ++i) {
      const double v = f(i * kPi / 720);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    return std::pair{hi - lo, std::max(1.0, std::abs(hi))};
  };
  auto J = [&](double phi) { return std::max(0.0, negentropy_at(engine, QuadratureDirection::single(phi))); };

  KurtosisEstimate est;
  const auto [ks, kscale] = spread(kurt);
  double phi_max = 0.0, phi_min = 0.0;
  if (ks <= 1e-9 * kscale) {
    est.rotationally_symmetric = true;
  } else {
    phi_max = periodic_extremum(kurt, true);
    phi_min = periodic_extremum(kurt, false);
  }
  est.dir_kmax = QuadratureDirection::single(phi_max);
  est.dir_kmin = QuadratureDirection::single(phi_min);
  est.kmax = kurt(phi_max);
  est.kmin = kurt(phi_min);
  est.j_at_kmax = J(phi_max);
  est.j_at_kmin = est.rotationally_symmetric ? est.j_at_kmax : J(phi_min);
  est.estimate = std::max(est.j_at_kmax, est.j_at_kmin);

  const auto [vs, vscale] = spread(variance);
  if (vs <= 1e-9 * vscale) {
    est.phi_vmax = 0.0;
    est.phi_vmin = 0.0;
  } else {
    est.phi_vmax = periodic_extremum(variance, true);
    est.phi_vmin = periodic_extremum(variance, false);
  }
  est.j_at_vmax = J(*est.phi_vmax);
  est.j_at_vmin = J(*est.phi_vmin);
  est.augmented_estimate = std::max({est.estimate, est.j_at_vmax, est.j_at_vmin});
  return est;
}

KurtosisEstimate kurtosis_two(const QuadratureEngine& engine, const OptimizerOptions& o) {
  const int nt = o.theta_samples, np = o.phi_samples;
  const double dtheta = nt > 1 ? (kPi / 2.0) / (nt - 1) : 0.0;
  const double dphi = 2.0 * kPi / np;
  const int cells_n = nt * np * np;
  std::vector<double> k(static_cast<std::size_t>(cells_n));
  auto params = [&](int c) {
    const int i = c / (np * np), j1 = (c / np) % np, j2 = c % np;
    return std::array<double, 3>{i * dtheta, j1 * dphi, j2 * dphi};
  };
  auto kurt = [&](const std::vector<double>& p) {
    return engine.moments(QuadratureDirection::two_mode(p[0], p[1], p[2])).kurtosis();
  };
  detail::parallel_for(cells_n, [&](int c) {
    const auto p = params(c);
    k[static_cast<std::size_t>(c)] = kurt({p[0], p[1], p[2]});
  });
  const auto [lo, hi] = std::minmax_element(k.begin(), k.end());

  KurtosisEstimate est;
  const std::vector<double> step{0.5 * (dtheta > 0.0 ? dtheta : 0.1), 0.5 * dphi, 0.5 * dphi};
  auto extremum = [&](bool maximize) {
    std::vector<double> signed_k(k);
    if (!maximize)
      for (double& x : signed_k) x = -x;
    const std::vector<Candidate> cells = seed_cells(signed_k, nt, np, dtheta, dphi, o.simplex_starts);
    const int starts = static_cast<int>(cells.size());
    auto f = [&](const std::vector<double>& p) { return maximize ? kurt(p) : -kurt(p); };
    std::vector<Candidate> out(static_cast<std::size_t>(starts));
    detail::parallel_for(starts, [&](int s) {
      const auto& c = cells[static_cast<std::size_t>(s)];
      const auto r = optimize::nelder_mead_max(f, {c.params[0], c.params[1], c.params[2]}, step, o.simplex_tolerance,
                                               o.simplex_max_iterations);
      out[static_cast<std::size_t>(s)] = r.value >= c.value
                                             ? Candidate{r.value, {r.x[0], wrap(r.x[1], 2.0 * kPi), wrap(r.x[2], 2.0 * kPi)}}
                                             : c;
    });
    return *std::min_element(out.begin(), out.end(), better);
  };
  if (*hi - *lo <= 1e-9 * std::max(1.0, std::abs(*hi))) {
    est.rotationally_symmetric = true;
    est.dir_kmax = est.dir_kmin = QuadratureDirection::two_mode(0.0, 0.0, 0.0);
  } else {
    est.dir_kmax = to_direction(2, extremum(true).params);
    est.dir_kmin = to_direction(2, extremum(false).params);
  }
  est.kmax = engine.moments(est.dir_kmax).kurtosis();
  est.kmin = engine.moments(est.dir_kmin).kurtosis();
  est.j_at_kmax = std::max(0.0, negentropy_at(engine, est.dir_kmax));
  est.j_at_kmin = std::max(0.0, negentropy_at(engine, est.dir_kmin));
  est.estimate = std::max(est.j_at_kmax, est.j_at_kmin);
  est.augmented_estimate = est.estimate;
  return est;
}

}  // namespace

double negentropy_at(const QuadratureEngine& engine, const QuadratureDirection& direction) {
  return negentropy_raw(engine.distribution(direction));
}

NklResult n_kl(const QuadratureEngine& engine, const OptimizerOptions& options) {
  NklResult res = engine.modes() == 1 ? n_kl_single(engine, options) : n_kl_two(engine, options);
  res.value = res.raw;
  if (res.raw < 0.0) {
    log::debug("N_KL clipped at 0 (raw ", res.raw, ")");
    res.value = 0.0;
  }
  return res;
}

NklResult n_kl(const FockState& state, const OptimizerOptions& options) {
  if (state.modes() > 2) throw ShapeError("N_KL is implemented for one and two modes");
  return n_kl(QuadratureEngine(state, state_grid(state, options.grid_points)), options);
}

KurtosisEstimate kurtosis_strategy(const QuadratureEngine& engine, const FockState& state, const OptimizerOptions& options) {
  if (engine.modes() != state.modes()) throw ShapeError("engine and state disagree on the number of modes");
  return state.modes() == 1 ? kurtosis_single(engine, state) : kurtosis_two(engine, options);
}

KurtosisEstimate kurtosis_strategy(const FockState& state, const OptimizerOptions& options) {
  return kurtosis_strategy(QuadratureEngine(state, state_grid(state, options.grid_points)), state, options);
}

double n_qr(const FockState& state) {
  return gaussian_entropy(covariance(state)) - von_neumann_entropy(state);
}

double genoni_lower(const FockState& state) {
  std::vector<double> pn;
  if (state.modes() == 1) {
    pn = state.photon_distribution(0);
  } else if (state.is_pure()) {
    for (const cplx& a : state.amplitudes()) pn.push_back(std::norm(a));
  } else {
    const CMatrix rho = state.density();
    for (Eigen::Index i = 0; i < rho.rows(); ++i) pn.push_back(rho(i, i).real());
  }
  return gaussian_entropy(covariance(state)) - shannon(pn);
}

double n_hs_lower(double nkl, int modes) {
  const double fn = std::min(1.0, std::exp(-nkl / 2.0 + 0.5 * modes * std::log(std::numbers::e / 2.0)));
  return 0.5 * (1.0 - fn) * (1.0 - fn);
}

FockState reference_gaussian_state(const FockState& state) {
  if (state.modes() != 1) throw ShapeError("reference Gaussian state in the Fock basis needs one mode");
  const CovarianceData cov = covariance(state);
  int cutoff = state.cutoff();
  for (;;) {
    try {
      return reference_gaussian_fock(cov, cutoff);
    } catch (const TruncationError& e) {
      const int next = std::max(e.required_cutoff(), cutoff + cutoff / 2);
      if (next > 1024) throw;
      cutoff = next;
    }
  }
}

HilbertSchmidt n_hs(const FockState& state, double nkl) {
  HilbertSchmidt out;
  out.purity = state.purity();
  out.lower = n_hs_lower(nkl, state.modes());
  if (state.modes() != 1) return out;
  const FockState g = reference_gaussian_state(state);
  const CMatrix rg = g.density();
  const CMatrix rho = state.density();
  const Eigen::Index d = std::min(rho.rows(), rg.rows());
  const double overlap = (rho.topLeftCorner(d, d) * rg.topLeftCorner(d, d)).trace().real();
  const double purity_g = g.purity();
  out.overlap = overlap;
  out.purity_g = purity_g;
  out.exact = (out.purity + purity_g - 2.0 * overlap) / (2.0 * out.purity);
  return out;
}

OverlapBound overlap_bound(const FockState& state, double nqr) {
  if (state.modes() != 1) throw ShapeError("the overlap bound is evaluated for one mode");
  const FockState g = reference_gaussian_state(state);
  const CMatrix rg = g.density();
  const CMatrix rho = state.density();
  const Eigen::Index d = std::min(rho.rows(), rg.rows());
  OverlapBound out;
  out.ratio = (rho.topLeftCorner(d, d) * rg.topLeftCorner(d, d)).trace().real() / state.purity();
  out.bound = std::sqrt(std::numbers::e / 2.0) * std::exp(-nqr / 2.0);
  return out;
}

OverlapBound overlap_bound(const FockState& state) { return overlap_bound(state, n_qr(state)); }

UncertaintyCheck uncertainty_check(const FockState& state, double nkl) {
  if (state.modes() != 1) throw ShapeError("the uncertainty relation is evaluated for one mode");
  const CovarianceData cov = covariance(state);
  UncertaintyCheck out;
  out.lhs = std::sqrt(std::max(0.0, cov.gamma.determinant()));
  out.rhs = h_inverse(std::max(0.0, nkl + von_neumann_entropy(state)));
  return out;
}

MeasureReport measure(const FockState& state, const std::string& label, const OptimizerOptions& options) {
  MeasureReport r;
  r.state = label;
  r.modes = state.modes();
  for (int m = 0; m < state.modes(); ++m) r.mean_photon_number += state.mean_photon_number(m);
  const QuadratureEngine engine(state, state_grid(state, options.grid_points));
  r.nkl = n_kl(engine, options);
  r.kurtosis = kurtosis_strategy(engine, state, options);
  r.nqr = n_qr(state);
  const HilbertSchmidt hs = n_hs(state, r.nkl.value);
  r.nhs_exact = hs.exact;
  r.nhs_lower = hs.lower;
  r.genoni_lower = genoni_lower(state);
  if (state.modes() == 1) {
    r.overlap = overlap_bound(state, r.nqr);
    r.uncertainty = uncertainty_check(state, r.nkl.value);
  }
  r.provenance.cutoff = state.cutoff();
  r.provenance.grid_points = options.grid_points;
  r.provenance.phase_tolerance = options.phase_tolerance;
  r.provenance.simplex_tolerance = options.simplex_tolerance;
  return r;
}

MeasureReport measure(const StateSpec& spec, int cutoff, const OptimizerOptions& options) {
  MeasureReport r = measure(build(spec, cutoff), to_string(spec), options);
  r.provenance.seed = spec.seed;
  return r;
}

double phase_distance(double a, double b) {
  const double d = wrap(a - b, kPi);
  return std::min(d, kPi - d);
}

std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(seed ^ splitmix64(index + 1)); }

RandomBenchSample random_bench_sample(const FockState& state, const OptimizerOptions& options) {
  const QuadratureEngine engine(state, state_grid(state, options.grid_points));
  const NklResult nkl = n_kl(engine, options);
  const KurtosisEstimate k = kurtosis_strategy(engine, state, options);
  RandomBenchSample s;
  s.nkl = nkl.value;
  s.phi_opt = nkl.direction.phis()[0];
  s.phi_kmax = k.phi_kmax();
  s.phi_kmin = k.phi_kmin();
  s.delta = std::min(phase_distance(s.phi_opt, s.phi_kmax), phase_distance(s.phi_opt, s.phi_kmin));
  s.rotationally_symmetric = k.rotationally_symmetric;
  if (s.nkl > 1e-12) {
    s.ratio = k.estimate / s.nkl;
    s.augmented_ratio = k.augmented_estimate / s.nkl;
  } else {
    s.ratio = s.augmented_ratio = 1.0;
  }
  return s;
}

RandomBenchSummary summarize(const std::vector<RandomBenchSample>& samples) {
  RandomBenchSummary out;
  out.samples = static_cast<int>(samples.size());
  out.delta_bin_width = kPi / 50.0;
  out.delta_histogram.assign(25, 0);
  out.ratio_bin_width = 0.02;
  out.ratio_histogram.assign(50, 0);
  if (samples.empty()) return out;
  for (const auto& s : samples) {
    const auto db = std::min<std::size_t>(24, static_cast<std::size_t>(s.delta / out.delta_bin_width));
    ++out.delta_histogram[db];
    const double rc = std::clamp(s.ratio, 0.0, 1.0);
    const auto rb = std::min<std::size_t>(49, static_cast<std::size_t>(rc / out.ratio_bin_width));
    ++out.ratio_histogram[rb];
    if (s.delta < kPi / 100.0) out.share_delta_small += 1.0;
    if (s.delta < 1e-4) out.share_exact += 1.0;
    if (s.ratio > 0.95) out.share_ratio_high += 1.0;
    out.mean_ratio += s.ratio;
    out.mean_augmented_ratio += s.augmented_ratio;
  }
  const double n = static_cast<double>(samples.size());
  out.share_delta_small /= n;
  out.share_exact /= n;
  out.share_ratio_high /= n;
  out.mean_ratio /= n;
  out.mean_augmented_ratio /= n;
  return out;
}

RandomBenchSummary random_bench(const RandomBenchConfig& config, std::vector<RandomBenchSample>* samples) {
  if (config.n_max < 1) throw DomainError("n_max must be >= 1");
  if (config.samples < 1) throw DomainError("need at least one sample");
  std::vector<RandomBenchSample> all(static_cast<std::size_t>(config.samples));
  detail::parallel_for(config.samples, [&](int i) {
    const std::uint64_t seed = derived_seed(config.seed, static_cast<std::uint64_t>(i));
    const FockState state = config.mixed ? random_mixed(config.n_max, seed) : random_pure(config.n_max, seed);
    RandomBenchSample s = random_bench_sample(state, config.options);
    s.seed = seed;
    all[static_cast<std::size_t>(i)] = s;
  });
  RandomBenchSummary out = summarize(all);
  if (samples) *samples = std::move(all);
  return out;
}

}  // namespace qng
