#pragma once

// Partial-transpose entanglement test strengthened by N_KL of the local modes,
// and the entangled-coherent-state case.

#include <iosfwd>
#include <utility>
#include <vector>

#include "qng/fock.hpp"
#include "qng/measures.hpp"

namespace qng {

struct LocalModeReport {
  double sqrt_det = 0.0;  // sqrt det Gamma of the local mode
  double lhs = 0.0;       // h(sqrt_det); NaN when sqrt_det < 1/2
  double rhs = 0.0;       // N_KL of the local mode; NaN when unphysical by density
  bool unphysical_by_covariance = false;
  bool unphysical_by_density = false;
  bool violates() const { return unphysical_by_covariance || unphysical_by_density || lhs < rhs; }
};

struct WitnessReport {
  double gamma_parameter = 0.0;
  LocalModeReport modes[2];
  /// The local mode with the smaller lhs - rhs margin.
  int decisive_mode = 1;
  double lhs = 0.0;
  double rhs = 0.0;
  double ppt_nu_min = 0.0;  // smallest symplectic eigenvalue of Gamma(rho^PT)
  bool gaussian_ppt_detects = false;
  bool enhanced_detects = false;
  double margin() const { return lhs - rhs; }
};

/// rho^PT, then the Gaussian diagonalizer, then both local modes. DomainError
/// unless the diagonalizer is a Gaussian two-mode operator.
WitnessReport enhanced_ppt_witness(const FockState& state, const ModeOperator& diagonalizer,
                                   const OptimizerOptions& options = {});

/// Local modes of the partially transposed entangled coherent state after the
/// 50:50 beam splitter, built in closed form. Neither is positive; the quadrature
/// distributions of the first are.
std::pair<FockState, FockState> ecs_local_modes(double gamma, int cutoff);
/// Smallest cutoff holding the coherent amplitudes sqrt(2) gamma to the tail tolerance.
int ecs_local_cutoff(double gamma);
/// The diagonalizing beam splitter B(pi/4).
ModeOperator ecs_diagonalizer(int cutoff);

/// Witness evaluation for the entangled coherent state from the closed-form
/// local modes; the Gaussian PPT test uses Gamma(rho) with p2 -> -p2.
WitnessReport ecs_witness(double gamma, const OptimizerOptions& options = {});

/// Reports at each gamma (evaluated in parallel). The grid must be ascending.
std::vector<WitnessReport> witness_scan(const std::vector<double>& gammas, const OptimizerOptions& options = {});

/// Bisection on the detection flag between the first pair of neighbouring scan
/// points that disagree. NoThreshold when every point agrees.
double witness_threshold(const std::vector<WitnessReport>& scan, const OptimizerOptions& options = {},
                         double tolerance = 1e-4);

struct WitnessSweep {
  std::vector<WitnessReport> points;
  double threshold = 0.0;
};
WitnessSweep witness_sweep(const std::vector<double>& gammas, const OptimizerOptions& options = {},
                           double tolerance = 1e-4);

/// gamma,sqrt_det,lhs,rhs,margin,ppt_nu_min,gaussian_ppt,enhanced,unphysical_by_density rows.
void write_witness_csv(std::ostream& os, const std::vector<WitnessReport>& points);

}  // namespace qng
