#include "qng/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "parallel.hpp"
#include "qng/error.hpp"
#include "qng/gaussian_ref.hpp"
#include "qng/log.hpp"
#include "qng/report_io.hpp"
#include "qng/states.hpp"

namespace qng {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

LocalModeReport local_mode(const FockState& mode, const OptimizerOptions& options) {
  LocalModeReport r;
  const CovarianceData cov = covariance(mode);
  r.sqrt_det = std::sqrt(std::max(0.0, cov.gamma.determinant()));
  if (r.sqrt_det < 0.5 - 1e-12) {
    r.unphysical_by_covariance = true;
    r.lhs = kNaN;
  } else {
    r.lhs = h(std::max(0.5, r.sqrt_det));
  }
  try {
    r.rhs = n_kl(mode, options).value;
  } catch (const NotDistribution& e) {
    r.unphysical_by_density = true;
    r.rhs = kNaN;
    log::info("local mode is unphysical by density: ", e.what());
  }
  return r;
}

void finish(WitnessReport& w) {
  auto margin = [](const LocalModeReport& m) {
    if (m.unphysical_by_covariance || m.unphysical_by_density) return -std::numeric_limits<double>::infinity();
    return m.lhs - m.rhs;
  };
  w.decisive_mode = margin(w.modes[0]) < margin(w.modes[1]) ? 0 : 1;
  const LocalModeReport& d = w.modes[w.decisive_mode];
  w.lhs = d.lhs;
  w.rhs = d.rhs;
  w.enhanced_detects = w.modes[0].violates() || w.modes[1].violates();
}

// e^{-a^2/2} a^n / sqrt(n!) for n < cutoff
RVector coherent_real(double a, int cutoff) {
  RVector c(cutoff);
  c(0) = std::exp(-0.5 * a * a);
  for (int n = 1; n < cutoff; ++n) c(n) = c(n - 1) * a / std::sqrt(static_cast<double>(n));
  return c;
}

}  // namespace

WitnessReport enhanced_ppt_witness(const FockState& state, const ModeOperator& diagonalizer, const OptimizerOptions& options) {
  if (state.modes() != 2) throw ShapeError("the witness needs a two-mode state");
  if (diagonalizer.modes != 2 || diagonalizer.kind != OperatorKind::Gaussian)
    throw DomainError("the diagonalizer must be a Gaussian two-mode unitary");
  const FockState pt = partial_transpose(state, 1);
  WitnessReport w;
  w.ppt_nu_min = symplectic_eigenvalues(covariance(pt)).min();
  w.gaussian_ppt_detects = w.ppt_nu_min < 0.5 - 1e-9;
  const FockState diag = apply_unitary(pt, diagonalizer);
  for (int m = 0; m < 2; ++m) w.modes[m] = local_mode(partial_trace(diag, m), options);
  finish(w);
  return w;
}

int ecs_local_cutoff(double gamma) {
  const double a2 = 2.0 * gamma * gamma;
  // The local modes are not positive, so truncation errors enter the
  // quadrature densities linearly in the cut amplitudes: stop once the
  // Poisson(a2) terms fall below 1e-32 past the peak.
  double log_term = -a2;
  int n = 0;
  while ((n < a2 || log_term > std::log(1e-32)) && n < 4000) {
    ++n;
    log_term += std::log(a2 / n);
  }
  return std::max(8, n + 1);
}

ModeOperator ecs_diagonalizer(int cutoff) { return beam_splitter(std::numbers::pi / 4.0, cutoff); }

std::pair<FockState, FockState> ecs_local_modes(double gamma, int cutoff) {
  if (!(gamma > 0.0)) throw DomainError("gamma must be positive");
  if (cutoff < 2) throw DomainError("cutoff must be at least 2");
  const double a = std::sqrt(2.0) * gamma;
  const RVector c = coherent_real(a, cutoff);
  // 1 / N^2 = 2 (1 - <-a|a>), <-a|a> = e^{-2 a^2}
  const double norm = 1.0 / (-2.0 * std::expm1(-2.0 * a * a));
  CMatrix r1 = CMatrix::Zero(cutoff, cutoff), r2 = CMatrix::Zero(cutoff, cutoff);
  for (int m = 0; m < cutoff; ++m)
    for (int n = 0; n < cutoff; ++n) {
      const double cc = c(m) * c(n);
      const double sm = (m % 2 == 0) ? 1.0 : -1.0, sn = (n % 2 == 0) ? 1.0 : -1.0;
      // |a><a| + |-a><-a|
      r1(m, n) = norm * cc * (1.0 + sm * sn);
      // -|a><-a| - |-a><a|
      r2(m, n) = -norm * cc * (sn + sm);
    }
  // vacuum entries without cancellation: 2 e^{-a^2} (1 - e^{-a^2}) and 2 (1 - e^{-a^2})
  r1(0, 0) = norm * 2.0 * std::exp(-a * a) * -std::expm1(-a * a);
  r2(0, 0) = norm * 2.0 * -std::expm1(-a * a);
  const double tail = std::max(std::abs(1.0 - r1.trace().real()), std::abs(1.0 - r2.trace().real()));
  if (tail > kTailTolerance) {
    std::ostringstream os;
    os << "cutoff " << cutoff << " too small for coherent amplitude " << a << " (tail " << tail << ")";
    throw TruncationError(os.str(), ecs_local_cutoff(gamma));
  }
  return {FockState::from_density(std::move(r1), 1, cutoff, tail, Positivity::Unchecked),
          FockState::from_density(std::move(r2), 1, cutoff, tail, Positivity::Unchecked)};
}

WitnessReport ecs_witness(double gamma, const OptimizerOptions& options) {
  WitnessReport w;
  w.gamma_parameter = gamma;
  const StateSpec spec = StateSpec::entangled_coherent(gamma);
  int cutoff = 16;
  CovarianceData cov;
  for (;;) {
    try {
      cov = covariance(build(spec, cutoff));
      break;
    } catch (const TruncationError& e) {
      const int next = std::max(e.required_cutoff(), cutoff + 8);
      if (next > 256) throw;
      cutoff = next;
    }
  }
  // partial transpose of mode 2 flips p2
  for (int k = 0; k < 4; ++k) {
    if (k != 3) {
      cov.gamma(3, k) = -cov.gamma(3, k);
      cov.gamma(k, 3) = -cov.gamma(k, 3);
    }
  }
  cov.means(3) = -cov.means(3);
  w.ppt_nu_min = symplectic_eigenvalues(cov).min();
  w.gaussian_ppt_detects = w.ppt_nu_min < 0.5 - 1e-9;
  const auto [r1, r2] = ecs_local_modes(gamma, ecs_local_cutoff(gamma));
  w.modes[0] = local_mode(r1, options);
  w.modes[1] = local_mode(r2, options);
  finish(w);
  return w;
}

std::vector<WitnessReport> witness_scan(const std::vector<double>& gammas, const OptimizerOptions& options) {
  for (std::size_t i = 1; i < gammas.size(); ++i)
    if (!(gammas[i] > gammas[i - 1])) throw DomainError("gamma grid must be strictly ascending");
  std::vector<WitnessReport> out(gammas.size());
  detail::parallel_for(static_cast<int>(gammas.size()),
                       [&](int i) { out[static_cast<std::size_t>(i)] = ecs_witness(gammas[static_cast<std::size_t>(i)], options); });
  return out;
}

double witness_threshold(const std::vector<WitnessReport>& scan, const OptimizerOptions& options, double tolerance) {
  if (scan.empty()) throw DomainError("empty scan");
  for (std::size_t i = 1; i < scan.size(); ++i) {
    if (scan[i].enhanced_detects == scan[i - 1].enhanced_detects) continue;
    double lo = scan[i - 1].gamma_parameter, hi = scan[i].gamma_parameter;
    const bool lo_flag = scan[i - 1].enhanced_detects;
    while (hi - lo > tolerance) {
      const double mid = 0.5 * (lo + hi);
      if (ecs_witness(mid, options).enhanced_detects == lo_flag)
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi);
  }
  const bool detects = scan.front().enhanced_detects;
  std::ostringstream os;
  os << "no detection change on [" << scan.front().gamma_parameter << ", " << scan.back().gamma_parameter << "]"
     << (detects ? " (detected everywhere)" : " (never detected)");
  throw NoThreshold(os.str(), detects);
}

WitnessSweep witness_sweep(const std::vector<double>& gammas, const OptimizerOptions& options, double tolerance) {
  WitnessSweep s;
  s.points = witness_scan(gammas, options);
  s.threshold = witness_threshold(s.points, options, tolerance);
  return s;
}

void write_witness_csv(std::ostream& os, const std::vector<WitnessReport>& points) {
  os << "gamma,sqrt_det,lhs,rhs,margin,ppt_nu_min,gaussian_ppt,enhanced,unphysical_by_density\n";
  for (const auto& w : points) {
    const auto& d = w.modes[w.decisive_mode];
    os << format_number(w.gamma_parameter) << ',' << format_number(d.sqrt_det) << ',' << format_number(w.lhs) << ','
       << format_number(w.rhs) << ',' << format_number(w.margin()) << ',' << format_number(w.ppt_nu_min) << ','
       << (w.gaussian_ppt_detects ? 1 : 0) << ',' << (w.enhanced_detects ? 1 : 0) << ','
       << (d.unphysical_by_density ? 1 : 0) << '\n';
  }
}

}  // namespace qng
