#pragma once

// Probability distributions of the N-mode quadrature
//   Q = sum_j c_j q_{j, phi_j},  q_phi = (a e^{i phi} + a^dag e^{-i phi}) / sqrt(2)
// obtained by reducing the linear optical network B(theta) R(phi1) R(phi2) to
// a single-mode homodyne measurement of x on mode 1.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qng/fock.hpp"

namespace qng {

class QuadratureDirection {
 public:
  /// thetas has N-1 entries, phis has N entries.
  QuadratureDirection(std::vector<double> thetas, std::vector<double> phis);
  static QuadratureDirection single(double phi) { return QuadratureDirection({}, {phi}); }
  static QuadratureDirection two_mode(double theta1, double phi1, double phi2) {
    return QuadratureDirection({theta1}, {phi1, phi2});
  }

  int modes() const noexcept { return static_cast<int>(phis_.size()); }
  const std::vector<double>& thetas() const noexcept { return thetas_; }
  const std::vector<double>& phis() const noexcept { return phis_; }
  /// c_1 = cos t1, c_j = cos t_j prod_{k<j} sin t_k, c_N = prod sin t_k.
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  /// Unit vector u with Q = u . (x1, p1, ..., xN, pN); q_phi = x cos phi - p sin phi.
  RVector phase_space_vector() const;

 private:
  std::vector<double> thetas_;
  std::vector<double> phis_;
  std::vector<double> coeffs_;
};

/// Uniform grid of `points` intervals (points + 1 nodes) on [center - hw, center + hw].
class QuadratureGrid {
 public:
  QuadratureGrid(double center, double half_width, int points = 4096);

  double center() const noexcept { return center_; }
  double half_width() const noexcept { return half_width_; }
  int points() const noexcept { return points_; }
  int nodes() const noexcept { return points_ + 1; }
  double spacing() const noexcept { return 2.0 * half_width_ / points_; }
  double lower() const noexcept { return center_ - half_width_; }
  double x(int i) const noexcept { return lower() + spacing() * i; }
  std::vector<double> abscissae() const;
  /// Composite Simpson weights.
  std::vector<double> simpson_weights() const;

  bool operator==(const QuadratureGrid& other) const noexcept {
    return center_ == other.center_ && half_width_ == other.half_width_ && points_ == other.points_;
  }

 private:
  double center_;
  double half_width_;
  int points_;
};

class QuadratureDistribution {
 public:
  /// Takes the density as is; moments are cached from Simpson integrals.
  QuadratureDistribution(QuadratureGrid grid, std::vector<double> density);
  /// Clips round-off negatives and rescales to unit mass.
  static QuadratureDistribution normalized(QuadratureGrid grid, std::vector<double> density);

  const QuadratureGrid& grid() const noexcept { return grid_; }
  const std::vector<double>& density() const noexcept { return density_; }
  double integral() const noexcept { return integral_; }
  double mean() const noexcept { return mean_; }
  double variance() const noexcept { return variance_; }
  double central_moment3() const noexcept { return m3_; }
  double central_moment4() const noexcept { return m4_; }
  double kurtosis() const noexcept { return m4_ / (variance_ * variance_); }

  /// Writes `x,density` rows with a header, 12 significant digits.
  void write_csv(std::ostream& os) const;

 private:
  QuadratureGrid grid_;
  std::vector<double> density_;
  double integral_ = 0.0;
  double mean_ = 0.0;
  double variance_ = 0.0;
  double m3_ = 0.0;
  double m4_ = 0.0;
};

/// Grid centred on <Q> with half width 8 max(1, sqrt(Var Q)).
QuadratureGrid default_grid(const FockState& state, const QuadratureDirection& direction, int points = 4096);
/// Direction-independent grid: centre 0, half width |means| + 8 max(1, sqrt(lambda_max(Gamma))).
QuadratureGrid state_grid(const FockState& state, int points = 4096);

QuadratureDistribution distribution(const FockState& state, const QuadratureDirection& direction,
                                    const QuadratureGrid& grid);
inline QuadratureDistribution distribution(const FockState& state, const QuadratureDirection& direction) {
  return distribution(state, direction, default_grid(state, direction));
}

struct OperatorMoments {
  double mean = 0.0;
  double variance = 0.0;
  double m3 = 0.0;  // central
  double m4 = 0.0;  // central
  double kurtosis() const { return m4 / (variance * variance); }
};

/// Raw moment tr(rho Q^order), order in 1..4, from ladder-operator algebra.
double moment(const FockState& state, const QuadratureDirection& direction, int order);
OperatorMoments operator_moments(const FockState& state, const QuadratureDirection& direction);

/// Degree-n trigonometric polynomial sum_k a_k cos(k phi) + b_k sin(k phi),
/// k = n, n-2, ..., >= 0 (the harmonics present in <q_phi^n>).
struct TrigPolynomial {
  int order = 0;
  std::vector<int> harmonics;
  std::vector<double> cos_coeffs;
  std::vector<double> sin_coeffs;
  double operator()(double phi) const;
};

/// The n+1 phases phi_j = phi0 + j pi / (n+1).
std::vector<double> moment_field_phases(int order, double phi0 = 0.0);
/// Reconstructs <q_phi^n> for all phi from its values at moment_field_phases.
TrigPolynomial reconstruct_moment_field(std::span<const double> samples, int order, double phi0 = 0.0);

/// Reusable evaluator for many directions of one state. Single-mode states
/// precompute phase harmonics of the density; two-mode states reduce each
/// direction through the beam-splitter network to a single-mode operator.
class QuadratureEngine {
 public:
  QuadratureEngine(const FockState& state, QuadratureGrid grid);
  explicit QuadratureEngine(const FockState& state);

  int modes() const noexcept { return modes_; }
  const QuadratureGrid& grid() const noexcept { return grid_; }

  QuadratureDistribution distribution(const QuadratureDirection& direction) const;
  QuadratureDistribution distribution(double phi) const { return distribution(QuadratureDirection::single(phi)); }
  OperatorMoments moments(const QuadratureDirection& direction) const;

  /// Single-mode operator whose x-quadrature statistics equal those of Q.
  CMatrix reduced_operator(const QuadratureDirection& direction) const;

  /// Two-mode only: single-mode engine on the same grid whose distribution at
  /// phase phi equals this engine's distribution at (theta, delta + phi, phi).
  QuadratureEngine network_slice(double theta, double delta) const;

 private:
  std::vector<double> raw_density(const QuadratureDirection& direction) const;
  QuadratureDistribution finish(std::vector<double> density) const;

  int modes_ = 1;
  bool checked_ = true;
  QuadratureGrid grid_;
  int support_ = 1;
  // single mode
  CMatrix rho_;
  std::vector<double> harmonics_re_;  // support_ x nodes
  std::vector<double> harmonics_im_;
  // two modes: weighted pure components over the trimmed support
  std::vector<double> weights_;
  std::vector<CVector> components_;
  std::vector<double> psi_;  // (2 support - 1) x nodes
  // i G_N = V diag(lambda) V^dag for the beam-splitter generator at total N
  std::vector<CMatrix> bs_vectors_;
  std::vector<RVector> bs_lambdas_;
};

/// Normalized oscillator eigenfunctions psi_0..psi_{count-1} at x via the stable
/// recurrence; row n of the result is psi_n on `xs`.
std::vector<double> oscillator_table(std::span<const double> xs, int count);

/// Inverse-CDF draws from a gridded density.
std::vector<double> draw_samples(const QuadratureDistribution& dist, std::size_t count, std::uint64_t seed);

}  // namespace qng
