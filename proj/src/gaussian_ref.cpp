#include "qng/gaussian_ref.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ladder.hpp"
#include "qng/error.hpp"
#include "qng/log.hpp"

namespace qng {

CovarianceData covariance(const FockState& state) {
  if (!state.truncation_safe()) {
    std::ostringstream os;
    os << "covariance of a truncation-unsafe state (tail mass " << state.tail_mass() << ")";
    throw TruncationError(os.str(), 0);
  }
  const int modes = state.modes();
  const int d = state.cutoff();
  const int big = d + 2;
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<detail::SparseC> r;
  for (int j = 0; j < modes; ++j) {
    const detail::SparseC a = detail::ladder(modes, big, j, false);
    const detail::SparseC ad = detail::ladder(modes, big, j, true);
    r.push_back(cplx(s) * (a + ad));
    r.push_back(cplx(0.0, -s) * (a - ad));
  }
  const Eigen::Index n = 2 * modes;
  CovarianceData cov{RVector::Zero(n), RMatrix::Zero(n, n)};
  if (state.is_pure()) {
    const CVector v = detail::embed(state.amplitudes(), modes, d, big);
    std::vector<CVector> w;
    for (const auto& op : r) w.push_back(op * v);
    for (Eigen::Index j = 0; j < n; ++j) cov.means(j) = v.dot(w[static_cast<std::size_t>(j)]).real();
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        cov.gamma(j, k) = w[static_cast<std::size_t>(j)].dot(w[static_cast<std::size_t>(k)]).real() - cov.means(j) * cov.means(k);
  } else {
    const CMatrix rho = detail::embed(state.density(), modes, d, big);
    std::vector<CMatrix> w;
    for (const auto& op : r) w.push_back(op * rho);
    for (Eigen::Index j = 0; j < n; ++j) cov.means(j) = w[static_cast<std::size_t>(j)].trace().real();
    // tr(rho r_j r_k) = tr(r_j W_k), W_k = r_k rho
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        cov.gamma(j, k) = detail::expectation(w[static_cast<std::size_t>(k)], r[static_cast<std::size_t>(j)]).real() -
                          cov.means(j) * cov.means(k);
  }
  cov.gamma = 0.5 * (cov.gamma + cov.gamma.transpose()).eval();
  return cov;
}

SymplecticSpectrum symplectic_eigenvalues(const CovarianceData& cov) {
  const auto& g = cov.gamma;
  if (g.rows() == 2 && g.cols() == 2) return {{std::sqrt(std::max(0.0, g.determinant()))}};
  if (g.rows() != 4 || g.cols() != 4) throw ShapeError("symplectic spectrum needs a 2x2 or 4x4 covariance");
  const double det_a = g.block<2, 2>(0, 0).determinant();
  const double det_b = g.block<2, 2>(2, 2).determinant();
  const double det_c = g.block<2, 2>(0, 2).determinant();
  const double det_g = g.determinant();
  const double delta = det_a + det_b + 2.0 * det_c;
  double disc = delta * delta - 4.0 * det_g;
  if (disc < 0.0) {
    if (disc < -1e-9 * std::max(1.0, delta * delta)) {
      std::ostringstream os;
      os << "covariance has no real symplectic spectrum (discriminant " << disc << ")";
      throw NumericsError(os.str());
    }
    disc = 0.0;
  }
  const double root = std::sqrt(disc);
  const double plus = 0.5 * (delta + root);
  // nu_-^2 = det / nu_+^2 avoids cancellation
  const double minus = plus > 0.0 ? det_g / plus : 0.5 * (delta - root);
  return {{std::sqrt(std::max(0.0, minus)), std::sqrt(std::max(0.0, plus))}};
}

double h(double x) {
  if (!(x >= 0.5 - 1e-9)) {
    std::ostringstream os;
    os << "h is defined for x >= 1/2, got " << x;
    throw DomainError(os.str());
  }
  if (x <= 0.5) return 0.0;
  const double lo = x - 0.5;
  return (x + 0.5) * std::log(x + 0.5) - lo * std::log(lo);
}

double h_inverse(double y) {
  if (!(y >= -1e-12)) {
    std::ostringstream os;
    os << "h_inverse needs a non-negative argument, got " << y;
    throw DomainError(os.str());
  }
  if (y <= 0.0) return 0.5;
  double lo = 0.5, hi = 1.0;
  while (h(hi) < y) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) < y ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  // Newton polish, h'(x) = ln((x + 1/2) / (x - 1/2))
  for (int i = 0; i < 3 && x > 0.5; ++i) {
    const double slope = std::log((x + 0.5) / (x - 0.5));
    const double next = x - (h(x) - y) / slope;
    if (!(next > 0.5) || !std::isfinite(next)) break;
    x = next;
  }
  return x;
}

double gaussian_entropy(const CovarianceData& cov) {
  double s = 0.0;
  for (double nu : symplectic_eigenvalues(cov).nus) s += h(nu);
  return s;
}

double von_neumann_entropy(const FockState& state) {
  if (state.is_pure()) return 0.0;
  RVector lam = linalg::hermitian_eigenvalues(state.density());
  if (lam.minCoeff() < -1e-7) {
    std::ostringstream os;
    os << "density matrix has eigenvalue " << lam.minCoeff();
    throw NotAState(os.str());
  }
  for (Eigen::Index i = 0; i < lam.size(); ++i) lam(i) = std::clamp(lam(i), 0.0, 1.0);
  lam /= lam.sum();
  double s = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i)
    if (lam(i) > 0.0) s -= lam(i) * std::log(lam(i));
  return s;
}

double renyi2_entropy(const FockState& state) { return -std::log(state.purity()); }

GaussianDecomposition decompose(const CovarianceData& cov) {
  if (cov.modes() != 1) throw ShapeError("single-mode covariance expected");
  const double nu = std::sqrt(std::max(0.0, cov.gamma.determinant()));
  if (nu < 0.5 - 1e-8) {
    std::ostringstream os;
    os << "unphysical covariance (sqrt det = " << nu << ")";
    throw DomainError(os.str());
  }
  Eigen::SelfAdjointEigenSolver<RMatrix> es(cov.gamma);
  const double lmin = es.eigenvalues()(0), lmax = es.eigenvalues()(1);
  GaussianDecomposition g;
  g.nbar = std::max(0.0, nu - 0.5);
  g.r = 0.25 * std::log(lmax / lmin);
  // S(r e^{i angle}) squeezes the quadrature x cos(angle/2) + p sin(angle/2).
  const RVector v = es.eigenvectors().col(0);
  g.angle = 2.0 * std::atan2(v(1), v(0));
  g.alpha = cplx(cov.means(0), cov.means(1)) / std::sqrt(2.0);
  return g;
}

FockState reference_gaussian_fock(const CovarianceData& cov, int cutoff) {
  const GaussianDecomposition g = decompose(cov);
  const int big = cutoff + 16;
  CMatrix tau = CMatrix::Zero(big, big);
  for (int n = 0; n < big; ++n) tau(n, n) = g.nbar == 0.0 ? (n == 0 ? 1.0 : 0.0) : std::pow(g.nbar / (g.nbar + 1.0), n) / (g.nbar + 1.0);
  CMatrix full = tau;
  if (g.r > 1e-14) {
    const CMatrix s = squeezer(g.r, g.angle, big).matrix;
    full = s * full * s.adjoint();
  }
  if (std::abs(g.alpha) > 1e-14) {
    const CMatrix dsp = displacement(g.alpha, big).matrix;
    full = dsp * full * dsp.adjoint();
  }
  CMatrix rho = full.topLeftCorner(cutoff, cutoff);
  const double kept = rho.trace().real();
  const double tail = std::max(0.0, 1.0 - kept);
  if (tail > kTailTolerance) {
    int needed = cutoff;
    const Eigen::VectorXd diag = full.diagonal().real();
    double acc = 0.0;
    for (int n = 0; n < big; ++n) {
      acc += diag(n);
      if (1.0 - acc <= kTailTolerance) {
        needed = n + 1;
        break;
      }
      needed = big + 1;
    }
    std::ostringstream os;
    os << "reference Gaussian state does not fit in cutoff " << cutoff << " (tail " << tail << ")";
    throw TruncationError(os.str(), needed);
  }
  return FockState::from_density(std::move(rho), 1, cutoff, tail);
}

double gaussian_entropy_gap(const SymplecticSpectrum& spectrum) {
  double gap = 0.0;
  for (double nu : spectrum.nus) gap += std::log(2.0 * nu) - h(nu);
  return gap;
}

double thermal_entropy_difference(double nbar) {
  if (nbar < 0.0) throw DomainError("mean photon number must be >= 0");
  return h(nbar + 0.5) - std::log1p(2.0 * nbar);
}

}  // namespace qng
