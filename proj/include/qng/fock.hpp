#pragma once

// Truncated Fock-space states of one or two bosonic modes and the Gaussian
// operator algebra acting on them.
//
// Two-mode basis ordering: |n1, n2> sits at index n1 * cutoff + n2.

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "qng/linalg.hpp"

namespace qng {

inline constexpr double kTailTolerance = 1e-10;
inline constexpr int kDefaultCutoffSingle = 64;
inline constexpr int kDefaultCutoffTwo = 24;

/// Whether a density matrix must be positive semidefinite. Partially
/// transposed operators are carried with `Unchecked`.
enum class Positivity { Required, Unchecked };

class FockState {
 public:
  static FockState from_amplitudes(CVector amplitudes, int modes, int cutoff, double tail_mass = 0.0);
  static FockState from_density(CMatrix rho, int modes, int cutoff, double tail_mass = 0.0,
                                Positivity positivity = Positivity::Required);

  int modes() const noexcept { return modes_; }
  int cutoff() const noexcept { return cutoff_; }
  Eigen::Index dimension() const noexcept;
  bool is_pure() const noexcept { return std::holds_alternative<CVector>(body_); }

  /// Throws ShapeError for mixed states.
  const CVector& amplitudes() const;
  CMatrix density() const;

  double tail_mass() const noexcept { return tail_mass_; }
  bool truncation_safe(double tol = kTailTolerance) const noexcept { return tail_mass_ <= tol; }
  /// False when constructed with Positivity::Unchecked.
  bool positivity_checked() const noexcept { return positivity_ == Positivity::Required; }

  double purity() const;
  double mean_photon_number(int mode = 0) const;
  /// Per-mode population of |n>, i.e. the diagonal of the reduced state.
  std::vector<double> photon_distribution(int mode = 0) const;

  /// One past the highest per-mode Fock level with population above `floor`.
  int support_cutoff(double floor = 1e-30) const;
  /// Same state in a different cutoff; discarded population is added to tail_mass.
  FockState with_cutoff(int new_cutoff) const;

 private:
  FockState(std::variant<CVector, CMatrix> body, int modes, int cutoff, double tail, Positivity pos);

  std::variant<CVector, CMatrix> body_;
  int modes_ = 1;
  int cutoff_ = 1;
  double tail_mass_ = 0.0;
  Positivity positivity_ = Positivity::Required;
};

/// Normalizes `amplitudes` into a pure state. Zero vector -> DegenerateInput,
/// wrong length -> ShapeError.
FockState make_pure(std::span<const cplx> amplitudes, int modes, int cutoff);

/// f |a><a| + (1-f) |b><b| (or the corresponding mixture of density matrices).
FockState mix(double f, const FockState& a, const FockState& b);

FockState tensor(const FockState& a, const FockState& b);

/// Reduced state of `keep` (0 or 1). Single-mode input -> ShapeError.
FockState partial_trace(const FockState& state, int keep);

/// <m1 n1|rho^PT|m2 n2> = <m1 n2|rho|m2 n1> when transposing mode 1 (`on` = 1).
FockState partial_transpose(const FockState& state, int on);

/// |<a|b>|^2 for pure a, <a|rho_b|a> otherwise a must be pure.
double fidelity(const FockState& pure, const FockState& other);

inline std::size_t two_mode_index(int n1, int n2, int cutoff) {
  return static_cast<std::size_t>(n1) * static_cast<std::size_t>(cutoff) + static_cast<std::size_t>(n2);
}

enum class OperatorKind { Generic, Gaussian };

struct ModeOperator {
  int modes = 1;
  int cutoff = 1;
  CMatrix matrix;
  OperatorKind kind = OperatorKind::Generic;

  ModeOperator adjoint() const { return {modes, cutoff, matrix.adjoint(), kind}; }
};

/// Composition lhs * rhs (rhs acts first). Gaussian if both factors are.
ModeOperator operator*(const ModeOperator& lhs, const ModeOperator& rhs);

ModeOperator annihilation(int cutoff);
ModeOperator identity_operator(int modes, int cutoff);
/// R(phi) = exp(i phi a^dagger a).
ModeOperator phase_rotation(double phi, int cutoff);
/// Lifts a single-mode operator onto `mode` of a two-mode space.
ModeOperator on_mode(const ModeOperator& single, int mode);

/// B(theta) = exp(theta (a1^dagger a2 - a2^dagger a1)), transmittance cos^2 theta.
/// Built block by block in total photon number; blocks cut by the cutoff are
/// exponentiated from the retained part of the generator.
ModeOperator beam_splitter(double theta, int cutoff);

/// Beam-splitter block for total photon number `total`, basis n1 = 0..total
/// (n2 = total - n1), with no truncation.
RMatrix beam_splitter_block(int total, double theta);

/// S12(zeta) = exp(-zeta a1^dag a2^dag + conj(zeta) a1 a2), zeta = s e^{i varphi}.
/// Built at twice the cutoff and truncated.
ModeOperator two_mode_squeezer(double s, double varphi, int cutoff);

/// S(xi) = exp((conj(xi) a^2 - xi a^dag^2) / 2), xi = r e^{i angle}; inflated then truncated.
ModeOperator squeezer(double r, double angle, int cutoff);

/// D(alpha) = exp(alpha a^dag - conj(alpha) a); inflated then truncated.
ModeOperator displacement(cplx alpha, int cutoff);

/// rho -> U rho U^dagger. U must be unitary on the columns the state occupies
/// (defect < 1e-10) or NumericsError is raised. Leaked norm goes to tail_mass.
FockState apply_unitary(const FockState& state, const ModeOperator& op);

/// A rho A^dagger renormalized; for non-unitary maps such as photon subtraction.
FockState apply_operator(const FockState& state, const ModeOperator& op);

}  // namespace qng
