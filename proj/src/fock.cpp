#include "qng/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qng/error.hpp"

namespace qng {
namespace {

// Full eigenvalue positivity check is done up to this dimension; above it only
// the diagonal is checked at construction and entropies re-check the spectrum.
constexpr Eigen::Index kEigenCheckLimit = 128;

Eigen::Index expected_dimension(int modes, int cutoff) {
  if (modes != 1 && modes != 2) throw ShapeError("only one- and two-mode states are supported");
  if (cutoff < 1) throw ShapeError("cutoff must be >= 1");
  return modes == 1 ? cutoff : static_cast<Eigen::Index>(cutoff) * cutoff;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Truncation of an operator built in a larger space down to `cutoff` per mode.
CMatrix truncate_operator(const CMatrix& big, int modes, int big_cutoff, int cutoff) {
  if (modes == 1) return big.topLeftCorner(cutoff, cutoff);
  const Eigen::Index d = static_cast<Eigen::Index>(cutoff) * cutoff;
  CMatrix out(d, d);
  for (int m1 = 0; m1 < cutoff; ++m1)
    for (int m2 = 0; m2 < cutoff; ++m2)
      for (int n1 = 0; n1 < cutoff; ++n1)
        for (int n2 = 0; n2 < cutoff; ++n2)
          out(two_mode_index(m1, m2, cutoff), two_mode_index(n1, n2, cutoff)) =
              big(two_mode_index(m1, m2, big_cutoff), two_mode_index(n1, n2, big_cutoff));
  return out;
}

}  // namespace

FockState::FockState(std::variant<CVector, CMatrix> body, int modes, int cutoff, double tail, Positivity pos)
    : body_(std::move(body)), modes_(modes), cutoff_(cutoff), tail_mass_(tail), positivity_(pos) {}

FockState FockState::from_amplitudes(CVector amplitudes, int modes, int cutoff, double tail_mass) {
  const Eigen::Index dim = expected_dimension(modes, cutoff);
  if (amplitudes.size() != dim) {
    std::ostringstream os;
    os << "amplitude vector has length " << amplitudes.size() << ", expected " << dim;
    throw ShapeError(os.str());
  }
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw DegenerateInput("zero or non-finite amplitude vector");
  amplitudes /= norm;
  return FockState(std::move(amplitudes), modes, cutoff, std::clamp(tail_mass, 0.0, 1.0), Positivity::Required);
}

FockState FockState::from_density(CMatrix rho, int modes, int cutoff, double tail_mass, Positivity positivity) {
  const Eigen::Index dim = expected_dimension(modes, cutoff);
  if (rho.rows() != dim || rho.cols() != dim) throw ShapeError("density matrix has the wrong shape");
  const double scale = std::max(1.0, rho.cwiseAbs().maxCoeff());
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw NotAState("density matrix is not Hermitian");
  const double tr = rho.trace().real();
  if (!(std::abs(tr) > 1e-300)) throw DegenerateInput("density matrix has zero trace");
  rho = (rho + rho.adjoint()).eval() * (0.5 / tr);

  if (positivity == Positivity::Required) {
    for (Eigen::Index i = 0; i < dim; ++i)
      if (rho(i, i).real() < -1e-9) throw NotAState("negative population on the diagonal");
    if (dim <= kEigenCheckLimit) {
      const RVector ev = linalg::hermitian_eigenvalues(rho);
      if (ev.minCoeff() < -1e-9) throw NotAState("density matrix has a negative eigenvalue");
    }
  }
  return FockState(std::move(rho), modes, cutoff, std::clamp(tail_mass, 0.0, 1.0), positivity);
}

Eigen::Index FockState::dimension() const noexcept {
  return modes_ == 1 ? cutoff_ : static_cast<Eigen::Index>(cutoff_) * cutoff_;
}

const CVector& FockState::amplitudes() const {
  if (!is_pure()) throw ShapeError("state is mixed; no amplitude vector");
  return std::get<CVector>(body_);
}

CMatrix FockState::density() const {
  if (is_pure()) {
    const CVector& v = std::get<CVector>(body_);
    return v * v.adjoint();
  }
  return std::get<CMatrix>(body_);
}

double FockState::purity() const {
  if (is_pure()) return 1.0;
  const CMatrix& rho = std::get<CMatrix>(body_);
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
  return rho.cwiseAbs2().sum();
}

std::vector<double> FockState::photon_distribution(int mode) const {
  if (mode < 0 || mode >= modes_) throw ShapeError("mode index out of range");
  std::vector<double> p(static_cast<std::size_t>(cutoff_), 0.0);
  const Eigen::Index dim = dimension();
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double pop = is_pure() ? std::norm(std::get<CVector>(body_)(i)) : std::get<CMatrix>(body_)(i, i).real();
    const int n = modes_ == 1 ? static_cast<int>(i) : (mode == 0 ? static_cast<int>(i / cutoff_) : static_cast<int>(i % cutoff_));
    p[static_cast<std::size_t>(n)] += pop;
  }
  return p;
}

double FockState::mean_photon_number(int mode) const {
  const auto p = photon_distribution(mode);
  double e = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) e += static_cast<double>(n) * p[n];
  return e;
}

int FockState::support_cutoff(double floor) const {
  int top = 0;
  for (int m = 0; m < modes_; ++m) {
    const auto p = photon_distribution(m);
    for (int n = cutoff_ - 1; n >= 0; --n) {
      if (std::abs(p[static_cast<std::size_t>(n)]) > floor) {
        top = std::max(top, n + 1);
        break;
      }
    }
  }
  return std::max(top, 1);
}

FockState FockState::with_cutoff(int new_cutoff) const {
  if (new_cutoff < 1) throw ShapeError("cutoff must be >= 1");
  const int keep = std::min(new_cutoff, cutoff_);
  auto map_index = [&](Eigen::Index i, int from, int to) -> Eigen::Index {
    if (modes_ == 1) return i;
    const int n1 = static_cast<int>(i / from), n2 = static_cast<int>(i % from);
    return static_cast<Eigen::Index>(two_mode_index(n1, n2, to));
  };
  auto retained = [&](Eigen::Index i) {
    if (modes_ == 1) return i < keep;
    return (i / cutoff_) < keep && (i % cutoff_) < keep;
  };
  const Eigen::Index new_dim = modes_ == 1 ? new_cutoff : static_cast<Eigen::Index>(new_cutoff) * new_cutoff;
  if (is_pure()) {
    const CVector& v = std::get<CVector>(body_);
    CVector out = CVector::Zero(new_dim);
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (retained(i)) out(map_index(i, cutoff_, new_cutoff)) = v(i);
    const double lost = std::max(0.0, 1.0 - out.squaredNorm());
    if (out.norm() == 0.0) throw DegenerateInput("truncation removed the whole state");
    return FockState(CVector(out / out.norm()), modes_, new_cutoff, std::min(1.0, tail_mass_ + lost), positivity_);
  }
  const CMatrix& rho = std::get<CMatrix>(body_);
  CMatrix out = CMatrix::Zero(new_dim, new_dim);
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    if (!retained(i)) continue;
    for (Eigen::Index j = 0; j < rho.cols(); ++j)
      if (retained(j)) out(map_index(i, cutoff_, new_cutoff), map_index(j, cutoff_, new_cutoff)) = rho(i, j);
  }
  const double tr = out.trace().real();
  if (!(tr > 0.0)) throw DegenerateInput("truncation removed the whole state");
  const double lost = std::max(0.0, 1.0 - tr);
  return FockState(CMatrix(out / tr), modes_, new_cutoff, std::min(1.0, tail_mass_ + lost), positivity_);
}

FockState make_pure(std::span<const cplx> amplitudes, int modes, int cutoff) {
  CVector v(static_cast<Eigen::Index>(amplitudes.size()));
  for (std::size_t i = 0; i < amplitudes.size(); ++i) v(static_cast<Eigen::Index>(i)) = amplitudes[i];
  return FockState::from_amplitudes(std::move(v), modes, cutoff);
}

FockState mix(double f, const FockState& a, const FockState& b) {
  if (a.modes() != b.modes() || a.cutoff() != b.cutoff()) throw ShapeError("mixture of states with different shapes");
  if (f < 0.0 || f > 1.0) throw DomainError("mixing weight must lie in [0, 1]");
  CMatrix rho = f * a.density() + (1.0 - f) * b.density();
  const double tail = f * a.tail_mass() + (1.0 - f) * b.tail_mass();
  return FockState::from_density(std::move(rho), a.modes(), a.cutoff(), tail);
}

FockState tensor(const FockState& a, const FockState& b) {
  if (a.modes() != 1 || b.modes() != 1) throw ShapeError("tensor expects two single-mode states");
  if (a.cutoff() != b.cutoff()) throw ShapeError("tensor factors must share a cutoff");
  const double tail = std::min(1.0, a.tail_mass() + b.tail_mass());
  if (a.is_pure() && b.is_pure()) {
    const CVector& u = a.amplitudes();
    const CVector& v = b.amplitudes();
    CVector out(u.size() * v.size());
    for (Eigen::Index i = 0; i < u.size(); ++i) out.segment(i * v.size(), v.size()) = u(i) * v;
    return FockState::from_amplitudes(std::move(out), 2, a.cutoff(), tail);
  }
  return FockState::from_density(kron(a.density(), b.density()), 2, a.cutoff(), tail);
}

FockState partial_trace(const FockState& state, int keep) {
  if (state.modes() != 2) throw ShapeError("partial trace needs a two-mode state");
  if (keep != 0 && keep != 1) throw ShapeError("mode index must be 0 or 1");
  const int d = state.cutoff();
  CMatrix out = CMatrix::Zero(d, d);
  if (state.is_pure()) {
    const CVector& v = state.amplitudes();
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n) {
        cplx acc = 0.0;
        for (int j = 0; j < d; ++j) {
          const auto im = keep == 0 ? two_mode_index(m, j, d) : two_mode_index(j, m, d);
          const auto in = keep == 0 ? two_mode_index(n, j, d) : two_mode_index(j, n, d);
          acc += v(static_cast<Eigen::Index>(im)) * std::conj(v(static_cast<Eigen::Index>(in)));
        }
        out(m, n) = acc;
      }
  } else {
    const CMatrix rho = state.density();
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n) {
        cplx acc = 0.0;
        for (int j = 0; j < d; ++j) {
          const auto im = keep == 0 ? two_mode_index(m, j, d) : two_mode_index(j, m, d);
          const auto in = keep == 0 ? two_mode_index(n, j, d) : two_mode_index(j, n, d);
          acc += rho(static_cast<Eigen::Index>(im), static_cast<Eigen::Index>(in));
        }
        out(m, n) = acc;
      }
  }
  const Positivity pos = state.positivity_checked() ? Positivity::Required : Positivity::Unchecked;
  return FockState::from_density(std::move(out), 1, d, state.tail_mass(), pos);
}

FockState partial_transpose(const FockState& state, int on) {
  if (state.modes() != 2) throw ShapeError("partial transpose needs a two-mode state");
  if (on != 0 && on != 1) throw ShapeError("mode index must be 0 or 1");
  const int d = state.cutoff();
  const CMatrix rho = state.density();
  CMatrix out(rho.rows(), rho.cols());
  for (int m1 = 0; m1 < d; ++m1)
    for (int n1 = 0; n1 < d; ++n1)
      for (int m2 = 0; m2 < d; ++m2)
        for (int n2 = 0; n2 < d; ++n2) {
          // <m1 n1| rho^PT |m2 n2>
          const auto row = two_mode_index(m1, n1, d), col = two_mode_index(m2, n2, d);
          const auto src_row = on == 1 ? two_mode_index(m1, n2, d) : two_mode_index(m2, n1, d);
          const auto src_col = on == 1 ? two_mode_index(m2, n1, d) : two_mode_index(m1, n2, d);
          out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
              rho(static_cast<Eigen::Index>(src_row), static_cast<Eigen::Index>(src_col));
        }
  return FockState::from_density(std::move(out), 2, d, state.tail_mass(), Positivity::Unchecked);
}

double fidelity(const FockState& pure, const FockState& other) {
  if (!pure.is_pure()) throw ShapeError("fidelity expects a pure reference state");
  if (pure.modes() != other.modes() || pure.cutoff() != other.cutoff()) throw ShapeError("fidelity of states with different shapes");
  const CVector& v = pure.amplitudes();
  if (other.is_pure()) return std::norm(v.dot(other.amplitudes()));
  return (v.adjoint() * other.density() * v)(0, 0).real();
}

ModeOperator operator*(const ModeOperator& lhs, const ModeOperator& rhs) {
  if (lhs.modes != rhs.modes || lhs.cutoff != rhs.cutoff) throw ShapeError("operator shapes differ");
  const OperatorKind kind =
      lhs.kind == OperatorKind::Gaussian && rhs.kind == OperatorKind::Gaussian ? OperatorKind::Gaussian : OperatorKind::Generic;
  return {lhs.modes, lhs.cutoff, lhs.matrix * rhs.matrix, kind};
}

ModeOperator annihilation(int cutoff) {
  if (cutoff < 1) throw ShapeError("cutoff must be >= 1");
  CMatrix a = CMatrix::Zero(cutoff, cutoff);
  for (int n = 1; n < cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return {1, cutoff, std::move(a), OperatorKind::Generic};
}

ModeOperator identity_operator(int modes, int cutoff) {
  const Eigen::Index dim = expected_dimension(modes, cutoff);
  return {modes, cutoff, CMatrix::Identity(dim, dim), OperatorKind::Gaussian};
}

ModeOperator phase_rotation(double phi, int cutoff) {
  if (cutoff < 1) throw ShapeError("cutoff must be >= 1");
  CMatrix r = CMatrix::Zero(cutoff, cutoff);
  for (int n = 0; n < cutoff; ++n) r(n, n) = std::polar(1.0, phi * n);
  return {1, cutoff, std::move(r), OperatorKind::Gaussian};
}

ModeOperator on_mode(const ModeOperator& single, int mode) {
  if (single.modes != 1) throw ShapeError("on_mode expects a single-mode operator");
  if (mode != 0 && mode != 1) throw ShapeError("mode index must be 0 or 1");
  const CMatrix id = CMatrix::Identity(single.cutoff, single.cutoff);
  CMatrix m = mode == 0 ? kron(single.matrix, id) : kron(id, single.matrix);
  return {2, single.cutoff, std::move(m), single.kind};
}

RMatrix beam_splitter_block(int total, double theta) {
  if (total < 0) throw ShapeError("photon number must be non-negative");
  const int dim = total + 1;
  RMatrix g = RMatrix::Zero(dim, dim);
  // G |n1, n2> = sqrt((n1+1) n2) |n1+1, n2-1> - sqrt(n1 (n2+1)) |n1-1, n2+1>
  for (int n1 = 0; n1 <= total; ++n1) {
    const int n2 = total - n1;
    if (n2 > 0) g(n1 + 1, n1) += std::sqrt(static_cast<double>((n1 + 1) * n2));
    if (n1 > 0) g(n1 - 1, n1) -= std::sqrt(static_cast<double>(n1 * (n2 + 1)));
  }
  return linalg::expm(RMatrix(theta * g));
}

ModeOperator beam_splitter(double theta, int cutoff) {
  if (cutoff < 1) throw ShapeError("cutoff must be >= 1");
  const Eigen::Index dim = static_cast<Eigen::Index>(cutoff) * cutoff;
  CMatrix u = CMatrix::Zero(dim, dim);
  for (int total = 0; total <= 2 * (cutoff - 1); ++total) {
    const int lo = std::max(0, total - cutoff + 1);
    const int hi = std::min(total, cutoff - 1);
    const int bdim = hi - lo + 1;
    RMatrix g = RMatrix::Zero(bdim, bdim);
    for (int n1 = lo; n1 <= hi; ++n1) {
      const int n2 = total - n1;
      if (n2 > 0 && n1 + 1 <= hi) g(n1 + 1 - lo, n1 - lo) += std::sqrt(static_cast<double>((n1 + 1) * n2));
      if (n1 > 0 && n1 - 1 >= lo) g(n1 - 1 - lo, n1 - lo) -= std::sqrt(static_cast<double>(n1 * (n2 + 1)));
    }
    const RMatrix block = linalg::expm(RMatrix(theta * g));
    for (int i = 0; i < bdim; ++i)
      for (int j = 0; j < bdim; ++j)
        u(static_cast<Eigen::Index>(two_mode_index(lo + i, total - lo - i, cutoff)),
          static_cast<Eigen::Index>(two_mode_index(lo + j, total - lo - j, cutoff))) = block(i, j);
  }
  return {2, cutoff, std::move(u), OperatorKind::Gaussian};
}

ModeOperator two_mode_squeezer(double s, double varphi, int cutoff) {
  if (cutoff < 1) throw ShapeError("cutoff must be >= 1");
  const int big = 2 * cutoff;
  const cplx zeta = std::polar(s, varphi);
  const Eigen::Index dim = static_cast<Eigen::Index>(big) * big;
  CMatrix u = CMatrix::Zero(dim, dim);
  // Blocks of fixed n1 - n2 = k, indexed by m = min(n1, n2).
  for (int k = -(big - 1); k <= big - 1; ++k) {
    const int off1 = std::max(k, 0), off2 = std::max(-k, 0);
    const int bdim = big - std::max(off1, off2);
    CMatrix g = CMatrix::Zero(bdim, bdim);
    for (int m = 0; m < bdim; ++m) {
      const int n1 = m + off1, n2 = m + off2;
      if (m + 1 < bdim) g(m + 1, m) += -zeta * std::sqrt(static_cast<double>((n1 + 1) * (n2 + 1)));
      if (m > 0) g(m - 1, m) += std::conj(zeta) * std::sqrt(static_cast<double>(n1 * n2));
    }
    const CMatrix block = linalg::expm(g);
    for (int i = 0; i < bdim; ++i)
      for (int j = 0; j < bdim; ++j)
        u(static_cast<Eigen::Index>(two_mode_index(i + off1, i + off2, big)),
          static_cast<Eigen::Index>(two_mode_index(j + off1, j + off2, big))) = block(i, j);
  }
  return {2, cutoff, truncate_operator(u, 2, big, cutoff), OperatorKind::Gaussian};
}

ModeOperator squeezer(double r, double angle, int cutoff) {
  if (cutoff < 1) throw ShapeError("cutoff must be >= 1");
  const int big = 2 * cutoff + 8;
  const CMatrix a = annihilation(big).matrix;
  const CMatrix ad = a.adjoint();
  const cplx xi = std::polar(r, angle);
  const CMatrix gen = 0.5 * (std::conj(xi) * (a * a) - xi * (ad * ad));
  return {1, cutoff, truncate_operator(linalg::expm(gen), 1, big, cutoff), OperatorKind::Gaussian};
}

ModeOperator displacement(cplx alpha, int cutoff) {
  if (cutoff < 1) throw ShapeError("cutoff must be >= 1");
  const int big = 2 * cutoff + 8;
  const CMatrix a = annihilation(big).matrix;
  const CMatrix gen = alpha * a.adjoint() - std::conj(alpha) * a;
  return {1, cutoff, truncate_operator(linalg::expm(gen), 1, big, cutoff), OperatorKind::Gaussian};
}

namespace {

std::vector<Eigen::Index> occupied_columns(const FockState& state) {
  std::vector<Eigen::Index> cols;
  const Eigen::Index dim = state.dimension();
  if (state.is_pure()) {
    const CVector& v = state.amplitudes();
    for (Eigen::Index i = 0; i < dim; ++i)
      if (std::abs(v(i)) > 1e-15) cols.push_back(i);
  } else {
    const CMatrix rho = state.density();
    for (Eigen::Index i = 0; i < dim; ++i)
      if (rho.col(i).cwiseAbs().maxCoeff() > 1e-15) cols.push_back(i);
  }
  return cols;
}

void check_shape(const FockState& state, const ModeOperator& op) {
  if (state.modes() != op.modes || state.cutoff() != op.cutoff)
    throw ShapeError("operator and state dimensions disagree");
}

FockState transform(const FockState& state, const CMatrix& m, double base_tail) {
  const Positivity pos = state.positivity_checked() ? Positivity::Required : Positivity::Unchecked;
  if (state.is_pure()) {
    CVector out = m * state.amplitudes();
    const double kept = out.squaredNorm();
    if (!(kept > 0.0)) throw DegenerateInput("operator annihilates the state");
    const double leak = std::max(0.0, 1.0 - kept);
    return FockState::from_amplitudes(std::move(out), state.modes(), state.cutoff(), std::min(1.0, base_tail + leak));
  }
  CMatrix rho = m * state.density() * m.adjoint();
  const double kept = rho.trace().real();
  const double leak = std::max(0.0, 1.0 - kept);
  return FockState::from_density(std::move(rho), state.modes(), state.cutoff(), std::min(1.0, base_tail + leak), pos);
}

}  // namespace

FockState apply_unitary(const FockState& state, const ModeOperator& op) {
  check_shape(state, op);
  const auto cols = occupied_columns(state);
  CMatrix w(op.matrix.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) w.col(static_cast<Eigen::Index>(j)) = op.matrix.col(cols[j]);
  const double defect = linalg::unitarity_defect(w);
  if (defect > 1e-10) {
    std::ostringstream os;
    os << "operator is not unitary on the occupied subspace (defect " << defect << ")";
    throw NumericsError(os.str());
  }
  return transform(state, op.matrix, state.tail_mass());
}

FockState apply_operator(const FockState& state, const ModeOperator& op) {
  check_shape(state, op);
  const Positivity pos = state.positivity_checked() ? Positivity::Required : Positivity::Unchecked;
  if (state.is_pure()) {
    CVector out = op.matrix * state.amplitudes();
    if (!(out.norm() > 0.0)) throw DegenerateInput("operator annihilates the state");
    return FockState::from_amplitudes(std::move(out), state.modes(), state.cutoff(), state.tail_mass());
  }
  CMatrix rho = op.matrix * state.density() * op.matrix.adjoint();
  return FockState::from_density(std::move(rho), state.modes(), state.cutoff(), state.tail_mass(), pos);
}

}  // namespace qng
