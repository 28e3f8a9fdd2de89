#include "qng/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "ladder.hpp"
#include "qng/error.hpp"
#include "qng/gaussian_ref.hpp"
#include "qng/kernels.hpp"
#include "qng/rng.hpp"

namespace qng {
namespace {

constexpr double kClipPhysical = -1e-14;
constexpr double kClipUnchecked = -1e-10;
constexpr double kMassTolerance = 1e-8;

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Raw moments tr(rho Q^k), k = 1..4, in a space padded by four levels so the
// ladder algebra is exact.
std::array<double, 4> raw_moments(const FockState& state, const std::vector<double>& coeffs,
                                  const std::vector<double>& phis) {
  const int modes = state.modes();
  const int d = state.cutoff();
  const int big = d + 4;
  const detail::SparseC q = detail::quadrature_operator(modes, big, coeffs, phis);
  std::array<double, 4> out{};
  if (state.is_pure()) {
    const CVector v = detail::embed(state.amplitudes(), modes, d, big);
    CVector w = v;
    for (int k = 0; k < 4; ++k) {
      w = q * w;
      out[static_cast<std::size_t>(k)] = v.dot(w).real();
    }
  } else {
    CMatrix y = detail::embed(state.density(), modes, d, big);
    for (int k = 0; k < 4; ++k) {
      y = q * y;
      out[static_cast<std::size_t>(k)] = y.trace().real();
    }
  }
  return out;
}

std::array<double, 4> raw_moments_single(const CMatrix& rho) {
  const int d = static_cast<int>(rho.rows());
  const int big = d + 4;
  const detail::SparseC q = detail::quadrature_operator(1, big, {1.0}, {0.0});
  CMatrix y = detail::embed(rho, 1, d, big);
  std::array<double, 4> out{};
  for (int k = 0; k < 4; ++k) {
    y = q * y;
    out[static_cast<std::size_t>(k)] = y.trace().real();
  }
  return out;
}

OperatorMoments central(const std::array<double, 4>& m) {
  OperatorMoments r;
  const double mu = m[0];
  r.mean = mu;
  r.variance = m[1] - mu * mu;
  r.m3 = m[2] - 3.0 * mu * m[1] + 2.0 * mu * mu * mu;
  r.m4 = m[3] - 4.0 * mu * m[2] + 6.0 * mu * mu * m[1] - 3.0 * mu * mu * mu * mu;
  return r;
}

void require_arity(int modes, const QuadratureDirection& direction) {
  if (direction.modes() != modes) {
    std::ostringstream os;
    os << "direction has " << direction.modes() << " modes but the state has " << modes;
    throw ShapeError(os.str());
  }
}

}  // namespace

QuadratureDirection::QuadratureDirection(std::vector<double> thetas, std::vector<double> phis)
    : thetas_(std::move(thetas)), phis_(std::move(phis)) {
  if (phis_.empty() || thetas_.size() + 1 != phis_.size())
    throw ShapeError("a direction needs N phases and N-1 beam-splitter angles");
  const std::size_t n = phis_.size();
  coeffs_.assign(n, 1.0);
  double sin_product = 1.0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    coeffs_[j] = std::cos(thetas_[j]) * sin_product;
    sin_product *= std::sin(thetas_[j]);
  }
  coeffs_[n - 1] = sin_product;
}

RVector QuadratureDirection::phase_space_vector() const {
  RVector u(2 * static_cast<Eigen::Index>(phis_.size()));
  for (std::size_t j = 0; j < phis_.size(); ++j) {
    u(2 * static_cast<Eigen::Index>(j)) = coeffs_[j] * std::cos(phis_[j]);
    u(2 * static_cast<Eigen::Index>(j) + 1) = -coeffs_[j] * std::sin(phis_[j]);
  }
  return u;
}

QuadratureGrid::QuadratureGrid(double center, double half_width, int points)
    : center_(center), half_width_(half_width), points_(points) {
  if (!std::isfinite(center) || !std::isfinite(half_width) || !(half_width > 0.0))
    throw GridError("grid half width must be positive and finite");
  if (points < 256 || !power_of_two(points)) throw GridError("grid points must be a power of two >= 256");
}

std::vector<double> QuadratureGrid::abscissae() const {
  std::vector<double> xs(static_cast<std::size_t>(nodes()));
  for (int i = 0; i < nodes(); ++i) xs[static_cast<std::size_t>(i)] = x(i);
  return xs;
}

std::vector<double> QuadratureGrid::simpson_weights() const {
  std::vector<double> w(static_cast<std::size_t>(nodes()));
  const double h3 = spacing() / 3.0;
  for (int i = 0; i < nodes(); ++i) w[static_cast<std::size_t>(i)] = h3 * (i == 0 || i == points_ ? 1.0 : (i % 2 ? 4.0 : 2.0));
  return w;
}

QuadratureDistribution::QuadratureDistribution(QuadratureGrid grid, std::vector<double> density)
    : grid_(std::move(grid)), density_(std::move(density)) {
  if (density_.size() != static_cast<std::size_t>(grid_.nodes())) throw ShapeError("density length does not match the grid");
  const auto w = grid_.simpson_weights();
  double mass = 0.0, first = 0.0;
  for (std::size_t i = 0; i < density_.size(); ++i) {
    mass += w[i] * density_[i];
    first += w[i] * grid_.x(static_cast<int>(i)) * density_[i];
  }
  integral_ = mass;
  if (!(mass > 0.0)) return;
  mean_ = first / mass;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (std::size_t i = 0; i < density_.size(); ++i) {
    const double dx = grid_.x(static_cast<int>(i)) - mean_;
    const double wp = w[i] * density_[i];
    m2 += wp * dx * dx;
    m3 += wp * dx * dx * dx;
    m4 += wp * dx * dx * dx * dx;
  }
  variance_ = m2 / mass;
  m3_ = m3 / mass;
  m4_ = m4 / mass;
}

QuadratureDistribution QuadratureDistribution::normalized(QuadratureGrid grid, std::vector<double> density) {
  for (double& v : density) {
    if (!std::isfinite(v)) throw NumericsError("non-finite density value");
    if (v < kClipPhysical) {
      std::ostringstream os;
      os << "density value " << v << " is negative beyond round-off";
      throw NumericsError(os.str());
    }
    if (v < 1e-300) v = 0.0;
  }
  const auto w = grid.simpson_weights();
  double mass = 0.0;
  for (std::size_t i = 0; i < density.size(); ++i) mass += w[i] * density[i];
  if (!(mass > 0.0)) throw NormalizationError("density has no mass on the grid");
  for (double& v : density) v /= mass;
  return QuadratureDistribution(std::move(grid), std::move(density));
}

void QuadratureDistribution::write_csv(std::ostream& os) const {
  const auto old = os.precision(12);
  os << "x,density\n";
  for (std::size_t i = 0; i < density_.size(); ++i) os << grid_.x(static_cast<int>(i)) << ',' << density_[i] << '\n';
  os.precision(old);
}

QuadratureGrid default_grid(const FockState& state, const QuadratureDirection& direction, int points) {
  const OperatorMoments m = operator_moments(state, direction);
  return QuadratureGrid(m.mean, 8.0 * std::max(1.0, std::sqrt(std::max(0.0, m.variance))), points);
}

QuadratureGrid state_grid(const FockState& state, int points) {
  const CovarianceData cov = covariance(state);
  Eigen::SelfAdjointEigenSolver<RMatrix> es(cov.gamma, Eigen::EigenvaluesOnly);
  const double lmax = std::max(0.0, es.eigenvalues().maxCoeff());
  return QuadratureGrid(0.0, cov.means.norm() + 8.0 * std::max(1.0, std::sqrt(lmax)), points);
}

QuadratureDistribution distribution(const FockState& state, const QuadratureDirection& direction,
                                    const QuadratureGrid& grid) {
  return QuadratureEngine(state, grid).distribution(direction);
}

double moment(const FockState& state, const QuadratureDirection& direction, int order) {
  require_arity(state.modes(), direction);
  if (order < 1 || order > 4) throw DomainError("moment order must be 1..4");
  return raw_moments(state, direction.coeffs(), direction.phis())[static_cast<std::size_t>(order - 1)];
}

OperatorMoments operator_moments(const FockState& state, const QuadratureDirection& direction) {
  require_arity(state.modes(), direction);
  return central(raw_moments(state, direction.coeffs(), direction.phis()));
}

double TrigPolynomial::operator()(double phi) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < harmonics.size(); ++i) {
    const int k = harmonics[i];
    acc += cos_coeffs[i] * std::cos(k * phi) + sin_coeffs[i] * std::sin(k * phi);
  }
  return acc;
}

std::vector<double> moment_field_phases(int order, double phi0) {
  if (order < 1) throw DomainError("moment order must be >= 1");
  std::vector<double> phases(static_cast<std::size_t>(order) + 1);
  for (int j = 0; j <= order; ++j) phases[static_cast<std::size_t>(j)] = phi0 + j * std::numbers::pi / (order + 1);
  return phases;
}

TrigPolynomial reconstruct_moment_field(std::span<const double> samples, int order, double phi0) {
  if (order < 1) throw DomainError("moment order must be >= 1");
  if (samples.size() != static_cast<std::size_t>(order) + 1) {
    std::ostringstream os;
    os << "order " << order << " needs " << order + 1 << " samples, got " << samples.size();
    throw ShapeError(os.str());
  }
  TrigPolynomial poly;
  poly.order = order;
  for (int k = order; k >= 0; k -= 2) poly.harmonics.push_back(k);
  const auto phases = moment_field_phases(order, phi0);
  const int n = order + 1;
  RMatrix a(n, n);
  for (int j = 0; j < n; ++j) {
    int col = 0;
    for (int k : poly.harmonics) {
      a(j, col++) = std::cos(k * phases[static_cast<std::size_t>(j)]);
      if (k > 0) a(j, col++) = std::sin(k * phases[static_cast<std::size_t>(j)]);
    }
  }
  RVector b(n);
  for (int j = 0; j < n; ++j) b(j) = samples[static_cast<std::size_t>(j)];
  const RVector c = a.colPivHouseholderQr().solve(b);
  int col = 0;
  for (int k : poly.harmonics) {
    poly.cos_coeffs.push_back(c(col++));
    poly.sin_coeffs.push_back(k > 0 ? c(col++) : 0.0);
  }
  return poly;
}

std::vector<double> oscillator_table(std::span<const double> xs, int count) {
  const std::size_t nodes = xs.size();
  std::vector<double> psi(static_cast<std::size_t>(count) * nodes, 0.0);
  if (count <= 0) return psi;
  const double norm0 = std::pow(std::numbers::pi, -0.25);
  for (std::size_t i = 0; i < nodes; ++i) {
    const double x = xs[i];
    double prev = 0.0;
    double cur = norm0 * std::exp(-0.5 * x * x);
    psi[i] = cur;
    for (int n = 0; n + 1 < count; ++n) {
      const double next = x * std::sqrt(2.0 / (n + 1)) * cur - std::sqrt(static_cast<double>(n) / (n + 1)) * prev;
      prev = cur;
      cur = next;
      psi[static_cast<std::size_t>(n + 1) * nodes + i] = cur;
    }
  }
  return psi;
}

QuadratureEngine::QuadratureEngine(const FockState& state) : QuadratureEngine(state, state_grid(state)) {}

QuadratureEngine::QuadratureEngine(const FockState& state, QuadratureGrid grid)
    : modes_(state.modes()), checked_(state.positivity_checked()), grid_(std::move(grid)) {
  if (!state.truncation_safe()) {
    std::ostringstream os;
    os << "state is truncation-unsafe (tail mass " << state.tail_mass() << "); increase the cutoff";
    throw TruncationError(os.str(), 0);
  }
  support_ = state.support_cutoff();
  const FockState trimmed = support_ < state.cutoff() ? state.with_cutoff(support_) : state;
  const auto xs = grid_.abscissae();
  const std::size_t nodes = xs.size();
  const int d = support_;

  if (modes_ == 1) {
    rho_ = trimmed.density();
    const auto psi = oscillator_table(xs, d);
    harmonics_re_.assign(static_cast<std::size_t>(d) * nodes, 0.0);
    harmonics_im_.assign(static_cast<std::size_t>(d) * nodes, 0.0);
    // H_0 = sum rho_mm psi_m^2, H_k = 2 sum_n rho_{n+k,n} psi_{n+k} psi_n
    for (int k = 0; k < d; ++k) {
      double* re = harmonics_re_.data() + static_cast<std::size_t>(k) * nodes;
      double* im = harmonics_im_.data() + static_cast<std::size_t>(k) * nodes;
      const double factor = k == 0 ? 1.0 : 2.0;
      for (int n = 0; n + k < d; ++n) {
        const cplx c = factor * rho_(n + k, n);
        if (c == 0.0) continue;
        const double* a = psi.data() + static_cast<std::size_t>(n + k) * nodes;
        const double* b = psi.data() + static_cast<std::size_t>(n) * nodes;
        for (std::size_t i = 0; i < nodes; ++i) {
          const double ab = a[i] * b[i];
          re[i] += c.real() * ab;
          im[i] += c.imag() * ab;
        }
      }
    }
    return;
  }

  if (trimmed.is_pure()) {
    weights_.push_back(1.0);
    components_.push_back(trimmed.amplitudes());
  } else {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(trimmed.density());
    const RVector& lam = es.eigenvalues();
    const double scale = lam.cwiseAbs().maxCoeff();
    for (Eigen::Index j = lam.size(); j-- > 0;) {
      if (std::abs(lam(j)) <= 1e-15 * scale) continue;
      weights_.push_back(lam(j));
      components_.push_back(es.eigenvectors().col(j));
    }
  }
  const int k_dim = 2 * d - 1;
  psi_ = oscillator_table(xs, k_dim);
  for (int total = 0; total <= 2 * (d - 1); ++total) {
    const int dim = total + 1;
    CMatrix ig = CMatrix::Zero(dim, dim);
    for (int n1 = 0; n1 <= total; ++n1) {
      const int n2 = total - n1;
      if (n2 > 0) ig(n1 + 1, n1) += cplx(0.0, std::sqrt(static_cast<double>((n1 + 1) * n2)));
      if (n1 > 0) ig(n1 - 1, n1) -= cplx(0.0, std::sqrt(static_cast<double>(n1 * (n2 + 1))));
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(ig);
    bs_vectors_.push_back(es.eigenvectors());
    bs_lambdas_.push_back(es.eigenvalues());
  }
}

CMatrix QuadratureEngine::reduced_operator(const QuadratureDirection& direction) const {
  require_arity(modes_, direction);
  const int d = support_;
  if (modes_ == 1) {
    CMatrix out = rho_;
    const double phi = direction.phis()[0];
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n) out(m, n) *= std::polar(1.0, phi * (m - n));
    return out;
  }
  // x on mode 1 after L = B(theta) R1(phi1) R2(phi2) is Q; blocks of B are
  // applied without truncation in a space of 2d - 1 levels per mode.
  const double theta = direction.thetas()[0];
  const double phi1 = direction.phis()[0], phi2 = direction.phis()[1];
  const int k_dim = 2 * d - 1;
  CMatrix rho1 = CMatrix::Zero(k_dim, k_dim);
  CMatrix m(k_dim, k_dim);
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const CVector& v = components_[c];
    m.setZero();
    for (int total = 0; total <= 2 * (d - 1); ++total) {
      const int lo = std::max(0, total - d + 1), hi = std::min(total, d - 1);
      CVector u = CVector::Zero(total + 1);
      for (int n1 = lo; n1 <= hi; ++n1) {
        const int n2 = total - n1;
        u(n1) = v(static_cast<Eigen::Index>(two_mode_index(n1, n2, d))) * std::polar(1.0, phi1 * n1 + phi2 * n2);
      }
      const CMatrix& vecs = bs_vectors_[static_cast<std::size_t>(total)];
      const RVector& lam = bs_lambdas_[static_cast<std::size_t>(total)];
      CVector t = vecs.adjoint() * u;
      for (Eigen::Index j = 0; j < t.size(); ++j) t(j) *= std::polar(1.0, -theta * lam(j));
      const CVector out = vecs * t;
      for (int n1 = 0; n1 <= total; ++n1) m(n1, total - n1) = out(n1);
    }
    rho1.noalias() += weights_[c] * (m * m.adjoint());
  }
  return rho1;
}

QuadratureEngine QuadratureEngine::network_slice(double theta, double delta) const {
  if (modes_ != 2) throw ShapeError("network slices need a two-mode engine");
  // A common phase rotation of both modes commutes with the beam splitter and
  // rotates the reduced mode-1 operator.
  CMatrix rho1 = reduced_operator(QuadratureDirection::two_mode(theta, delta, 0.0));
  const int dim = static_cast<int>(rho1.rows());
  QuadratureEngine slice(FockState::from_density(std::move(rho1), 1, dim, 0.0, Positivity::Unchecked), grid_);
  slice.checked_ = checked_;
  return slice;
}

std::vector<double> QuadratureEngine::raw_density(const QuadratureDirection& direction) const {
  require_arity(modes_, direction);
  const std::size_t nodes = static_cast<std::size_t>(grid_.nodes());
  std::vector<double> p(nodes);
  if (modes_ == 1) {
    kernels::omp::synthesize_density(harmonics_re_.data(), harmonics_im_.data(), support_, nodes, direction.phis()[0], p.data());
  } else {
    kernels::omp::quadratic_form_density(reduced_operator(direction), psi_.data(), nodes, p.data());
  }
  return p;
}

QuadratureDistribution QuadratureEngine::finish(std::vector<double> density) const {
  const double floor = checked_ ? kClipPhysical : kClipUnchecked;
  for (double& v : density) {
    if (!std::isfinite(v)) throw NumericsError("non-finite density value");
    if (v < floor) {
      std::ostringstream os;
      os << "quadrature density " << v << " is negative";
      if (checked_) throw NumericsError(os.str());
      throw NotDistribution(os.str() + " (operator is not a state)");
    }
    if (v < 1e-300) v = 0.0;
  }
  const auto w = grid_.simpson_weights();
  double mass = 0.0;
  for (std::size_t i = 0; i < density.size(); ++i) mass += w[i] * density[i];
  if (mass < 1.0 - kMassTolerance) {
    std::ostringstream os;
    os << "grid captures mass " << mass << "; use half_width >= " << 1.5 * grid_.half_width();
    throw GridError(os.str());
  }
  if (mass > 1.0 + kMassTolerance) {
    std::ostringstream os;
    os << "grid integral " << mass << " exceeds one; refine the grid";
    throw GridError(os.str());
  }
  for (double& v : density) v /= mass;
  return QuadratureDistribution(grid_, std::move(density));
}

QuadratureDistribution QuadratureEngine::distribution(const QuadratureDirection& direction) const {
  return finish(raw_density(direction));
}

OperatorMoments QuadratureEngine::moments(const QuadratureDirection& direction) const {
  return central(raw_moments_single(reduced_operator(direction)));
}

std::vector<double> draw_samples(const QuadratureDistribution& dist, std::size_t count, std::uint64_t seed) {
  const auto& p = dist.density();
  const auto& grid = dist.grid();
  const double h = grid.spacing();
  std::vector<double> cdf(p.size(), 0.0);
  for (std::size_t i = 1; i < p.size(); ++i) cdf[i] = cdf[i - 1] + 0.5 * h * (p[i - 1] + p[i]);
  const double total = cdf.back();
  if (!(total > 0.0)) throw NormalizationError("cannot sample from a distribution without mass");
  Rng rng = Rng::stream(seed, 0);
  std::vector<double> out(count);
  for (auto& x : out) {
    const double u = rng.uniform() * total;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::size_t hi = std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
    const std::size_t lo = hi == 0 ? 0 : hi - 1;
    const double span = cdf[hi] - cdf[lo];
    const double t = span > 0.0 ? (u - cdf[lo]) / span : 0.0;
    x = grid.x(static_cast<int>(lo)) + t * h;
  }
  return out;
}

}  // namespace qng
