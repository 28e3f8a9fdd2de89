#include "qng/info_theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>

#include "qng/error.hpp"
#include "qng/kernels.hpp"
#include "qng/log.hpp"

namespace qng {
namespace {

constexpr double kMassTolerance = 1e-9;

void require_normalized(const QuadratureDistribution& dist) {
  if (std::abs(dist.integral() - 1.0) > kMassTolerance) {
    std::ostringstream os;
    os << "distribution integrates to " << dist.integral();
    throw NormalizationError(os.str());
  }
}

// CDF at the grid nodes: per-interval four-point rule, trapezoid at the ends.
// Mass of each grid cell [x_i, x_{i+1}] from a four-point rule (trapezoid at
// the ends). Bins are summed from these pieces rather than differenced from a
// running CDF, which would lose the tails to cancellation near 1.
std::vector<double> cell_masses(const QuadratureDistribution& dist) {
  const auto& p = dist.density();
  const std::size_t n = p.size();
  const double h = dist.grid().spacing();
  std::vector<double> m(n - 1, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (i == 0 || i + 2 >= n) {
      m[i] = 0.5 * h * (p[i] + p[i + 1]);
    } else {
      m[i] = h / 24.0 * (-p[i - 1] + 13.0 * p[i] + 13.0 * p[i + 1] - p[i + 2]);
    }
  }
  return m;
}

// Mass of cell i left of fraction t, cubic Hermite in the cell.
double cell_partial(const QuadratureDistribution& dist, const std::vector<double>& m, std::size_t i, double t) {
  const auto& p = dist.density();
  const double h = dist.grid().spacing();
  const double t2 = t * t, t3 = t2 * t;
  const double h10 = t3 - 2 * t2 + t, h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
  const double v = h01 * m[i] + h * (h10 * p[i] + h11 * p[i + 1]);
  return std::clamp(v, std::min(0.0, m[i]), std::max(0.0, m[i]));
}

// Cell index and fraction of x, clamped to the grid.
std::pair<std::size_t, double> locate(const QuadratureDistribution& dist, std::size_t cells, double x) {
  const auto& grid = dist.grid();
  const double s = std::clamp((x - grid.lower()) / grid.spacing(), 0.0, static_cast<double>(cells));
  auto i = static_cast<std::size_t>(s);
  if (i >= cells) i = cells - 1;
  return {i, s - static_cast<double>(i)};
}

double mass_between(const QuadratureDistribution& dist, const std::vector<double>& m, double a, double b) {
  const auto [ia, ta] = locate(dist, m.size(), a);
  const auto [ib, tb] = locate(dist, m.size(), b);
  if (ia == ib) return cell_partial(dist, m, ib, tb) - cell_partial(dist, m, ia, ta);
  double acc = m[ia] - cell_partial(dist, m, ia, ta);
  for (std::size_t i = ia + 1; i < ib; ++i) acc += m[i];
  return acc + cell_partial(dist, m, ib, tb);
}

// Standard normal mass of [a, b] in standardized units, from whichever tail
// keeps full relative precision.
double normal_mass(double a, double b) {
  const double r = 1.0 / std::numbers::sqrt2;
  if (a >= 0.0) return 0.5 * (std::erfc(a * r) - std::erfc(b * r));
  if (b <= 0.0) return 0.5 * (std::erfc(-b * r) - std::erfc(-a * r));
  return 1.0 - 0.5 * (std::erfc(-a * r) + std::erfc(b * r));
}


}  // namespace

EntropyEstimate differential_entropy(const QuadratureDistribution& dist) {
  require_normalized(dist);
  const auto& p = dist.density();
  const auto w = dist.grid().simpson_weights();
  const double full = kernels::omp::entropy_sum(p.data(), w.data(), p.size());

  const QuadratureGrid& g = dist.grid();
  const QuadratureGrid coarse(g.center(), g.half_width(), g.points() / 2);
  std::vector<double> pc(static_cast<std::size_t>(coarse.nodes()));
  for (std::size_t i = 0; i < pc.size(); ++i) pc[i] = p[2 * i];
  const auto wc = coarse.simpson_weights();
  double mass_c = 0.0;
  for (std::size_t i = 0; i < pc.size(); ++i) mass_c += wc[i] * pc[i];
  for (double& v : pc) v /= mass_c;
  const double half = kernels::omp::entropy_sum(pc.data(), wc.data(), pc.size());
  return {full, std::abs(full - half)};
}

double gaussian_entropy_1d(double variance) {
  if (!(variance > 0.0)) throw DomainError("variance must be positive");
  return 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * variance);
}

double negentropy_raw(const QuadratureDistribution& dist) {
  return gaussian_entropy_1d(dist.variance()) - differential_entropy(dist).value;
}

double negentropy(const QuadratureDistribution& dist) {
  const double raw = negentropy_raw(dist);
  if (raw < 0.0) {
    log::debug("negentropy clipped at 0 (raw ", raw, ")");
    return 0.0;
  }
  return raw;
}

QuadratureDistribution moment_matched_gaussian(const QuadratureDistribution& dist) {
  const double mu = dist.mean(), var = dist.variance();
  if (!(var > 0.0)) throw DomainError("variance must be positive");
  const auto& grid = dist.grid();
  std::vector<double> g(static_cast<std::size_t>(grid.nodes()));
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * var);
  for (int i = 0; i < grid.nodes(); ++i) {
    const double dx = grid.x(i) - mu;
    g[static_cast<std::size_t>(i)] = norm * std::exp(-0.5 * dx * dx / var);
  }
  return QuadratureDistribution(grid, std::move(g));
}

double kl_divergence(const QuadratureDistribution& p, const QuadratureDistribution& q) {
  if (!(p.grid() == q.grid())) throw ShapeError("KL divergence needs a shared grid");
  const auto w = p.grid().simpson_weights();
  const double v = kernels::omp::relative_entropy_sum(p.density().data(), q.density().data(), w.data(), w.size());
  if (std::isinf(v)) throw SupportError("q vanishes where p has mass");
  return v;
}

BinnedDistribution::BinnedDistribution(double width, double origin, std::vector<double> masses)
    : BinnedDistribution(width, origin, std::move(masses), origin) {}

BinnedDistribution::BinnedDistribution(double width, double origin, std::vector<double> masses, double anchor)
    : width_(width), origin_(origin), masses_(std::move(masses)), anchor_(anchor) {
  if (!(width > 0.0) || !std::isfinite(width)) throw DomainError("bin width must be positive");
  for (double m : masses_)
    if (m < 0.0 || !std::isfinite(m)) throw DomainError("bin masses must be finite and non-negative");
}

BinnedDistribution BinnedDistribution::coarsen(int factor) const {
  if (factor < 1) throw DomainError("coarsening factor must be >= 1");
  const auto g0 = static_cast<long long>(std::llround((origin_ - anchor_) / width_));
  const auto group = [factor](long long g) {
    return g >= 0 ? g / factor : -((-g + factor - 1) / factor);
  };
  const long long first = group(g0);
  const long long last = group(g0 + static_cast<long long>(masses_.size()) - 1);
  std::vector<double> out(static_cast<std::size_t>(last - first + 1), 0.0);
  for (std::size_t i = 0; i < masses_.size(); ++i)
    out[static_cast<std::size_t>(group(g0 + static_cast<long long>(i)) - first)] += masses_[i];
  const double width = width_ * factor;
  return BinnedDistribution(width, anchor_ + static_cast<double>(first) * width, std::move(out), anchor_);
}

bool BinnedDistribution::same_binning(const BinnedDistribution& other) const noexcept {
  const double tol = 1e-12 * std::max(1.0, std::abs(origin_));
  return masses_.size() == other.masses_.size() && std::abs(width_ - other.width_) <= 1e-12 * width_ &&
         std::abs(origin_ - other.origin_) <= tol;
}

BinnedDistribution bin(const QuadratureDistribution& dist, double width) { return bin(dist, width, -0.5 * width); }

BinnedDistribution bin(const QuadratureDistribution& dist, double width, double anchor) {
  if (!(width > 0.0)) throw DomainError("bin width must be positive");
  const auto& grid = dist.grid();
  const double lower = grid.lower(), upper = grid.lower() + 2.0 * grid.half_width();
  const double first = std::floor((lower - anchor) / width);
  const double last = std::ceil((upper - anchor) / width);
  const auto count = static_cast<std::size_t>(std::max(1.0, last - first));
  const double origin = anchor + first * width;
  const auto cells = cell_masses(dist);
  std::vector<double> masses(count);
  double total = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const double a = origin + static_cast<double>(k) * width;
    masses[k] = std::max(0.0, mass_between(dist, cells, a, a + width));
    total += masses[k];
  }
  if (!(total > 0.0)) throw NormalizationError("binned distribution has no mass");
  if (std::abs(total - 1.0) > 1e-12) log::debug("binning captured mass ", total, "; renormalized");
  for (double& m : masses) m /= total;
  return BinnedDistribution(width, origin, std::move(masses), anchor);
}

BinnedDistribution gaussian_bins(double mean, double variance, const BinnedDistribution& like) {
  if (!(variance > 0.0)) throw DomainError("variance must be positive");
  const double sd = std::sqrt(variance);
  std::vector<double> masses(like.size());
  for (std::size_t k = 0; k < like.size(); ++k) {
    const double a = like.origin() + static_cast<double>(k) * like.width();
    masses[k] = std::max(0.0, normal_mass((a - mean) / sd, (a + like.width() - mean) / sd));
  }
  return BinnedDistribution(like.width(), like.origin(), std::move(masses), like.anchor());
}

double binned_kl(const BinnedDistribution& p, const BinnedDistribution& q) {
  if (!p.same_binning(q)) throw ShapeError("binned KL needs identical binning");
  double acc = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double a = p.masses()[k], b = q.masses()[k];
    if (a <= 0.0) continue;
    if (b <= 0.0) return std::numeric_limits<double>::infinity();
    acc += a * std::log(a / b);
  }
  return acc;
}

SampleNegentropy sample_negentropy(std::span<const double> samples, int bins) {
  const std::size_t n = samples.size();
  if (n < 1000) {
    std::ostringstream os;
    os << "sample negentropy needs at least 1000 samples, got " << n;
    throw SampleSizeError(os.str());
  }
  if (bins < 2) throw DomainError("need at least two bins");
  double mean = 0.0;
  for (double x : samples) mean += x;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double x : samples) var += (x - mean) * (x - mean);
  var /= static_cast<double>(n - 1);
  const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
  const double lo = *lo_it, hi = *hi_it;
  if (!(hi > lo)) throw DegenerateInput("samples have no spread");
  const double width = (hi - lo) / bins;
  std::vector<std::size_t> counts(static_cast<std::size_t>(bins), 0);
  std::vector<std::size_t> index(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto k = static_cast<std::size_t>((samples[i] - lo) / width);
    if (k >= counts.size()) k = counts.size() - 1;
    index[i] = k;
    ++counts[k];
  }
  const double dn = static_cast<double>(n);
  double plug_in = 0.0;
  int occupied = 0;
  for (std::size_t c : counts) {
    if (c == 0) continue;
    ++occupied;
    const double p = static_cast<double>(c) / dn;
    plug_in -= p * std::log(p / width);
  }
  const double correction = (occupied - 1) / (2.0 * dn);
  const double entropy = plug_in + correction;
  // Delta method: H is the mean of -ln f(X); its variance is Var(-ln f)/n.
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = -std::log(static_cast<double>(counts[index[i]]) / (dn * width));
    m1 += v;
    m2 += v * v;
  }
  m1 /= dn;
  m2 /= dn;
  SampleNegentropy out;
  out.value = gaussian_entropy_1d(var) - entropy;
  out.half_width = 1.96 * std::sqrt(std::max(0.0, m2 - m1 * m1) / dn);
  out.bias_correction = correction;
  out.samples = n;
  out.bins = bins;
  return out;
}

}  // namespace qng
