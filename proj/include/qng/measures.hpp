#pragma once

// Non-Gaussianity measures: N_KL with its optimizer, the kurtosis strategy,
// N_QR, the photon-number lower bound, Hilbert-Schmidt quantities, the
// trace-overlap bound and the entropic uncertainty relation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qng/fock.hpp"
#include "qng/quadrature.hpp"
#include "qng/states.hpp"

namespace qng {

struct OptimizerOptions {
  int grid_points = 4096;
  // one mode
  int phase_samples = 180;
  int refine_brackets = 3;
  double phase_tolerance = 1e-6;
  // two modes
  int theta_samples = 12;
  int phi_samples = 24;
  int simplex_starts = 5;
  double simplex_tolerance = 1e-5;
  int simplex_max_iterations = 2000;
  /// Top-2 refined optima closer than this raise the multimodality flag.
  double multimodal_tolerance = 1e-6;
};

struct NklResult {
  double value = 0.0;  // clipped at zero
  double raw = 0.0;
  QuadratureDirection direction = QuadratureDirection::single(0.0);
  double coarse_value = 0.0;
  std::vector<double> refined_values;  // descending
  int evaluations = 0;
  int iterations = 0;
  bool multimodal = false;
  bool converged = true;
};

/// Negentropy of Q at `direction`, unclipped.
double negentropy_at(const QuadratureEngine& engine, const QuadratureDirection& direction);

NklResult n_kl(const QuadratureEngine& engine, const OptimizerOptions& options = {});
NklResult n_kl(const FockState& state, const OptimizerOptions& options = {});

struct KurtosisEstimate {
  QuadratureDirection dir_kmax = QuadratureDirection::single(0.0);
  QuadratureDirection dir_kmin = QuadratureDirection::single(0.0);
  double kmax = 0.0;
  double kmin = 0.0;
  double j_at_kmax = 0.0;
  double j_at_kmin = 0.0;
  double estimate = 0.0;  // max(j_at_kmax, j_at_kmin)
  bool rotationally_symmetric = false;
  // Variance-extremal candidates (single mode only).
  std::optional<double> phi_vmax, phi_vmin;
  double j_at_vmax = 0.0;
  double j_at_vmin = 0.0;
  double augmented_estimate = 0.0;  // max over all four candidates

  double phi_kmax() const { return dir_kmax.phis()[0]; }
  double phi_kmin() const { return dir_kmin.phis()[0]; }
};

/// Single mode: kurtosis extrema located on the moment fields reconstructed
/// from n + 1 phases per order. Two modes: kurtosis optimized over (theta, phi1, phi2).
KurtosisEstimate kurtosis_strategy(const QuadratureEngine& engine, const FockState& state, const OptimizerOptions& options = {});
KurtosisEstimate kurtosis_strategy(const FockState& state, const OptimizerOptions& options = {});

/// sum h(nu_i) - S1(rho).
double n_qr(const FockState& state);

/// S1(rho_G) - H(P_n) with P_n the photon-number distribution. One mode.
double genoni_lower(const FockState& state);

struct HilbertSchmidt {
  std::optional<double> exact;  // one mode only
  double lower = 0.0;
  double purity = 0.0;           // tr rho^2
  std::optional<double> purity_g;  // tr rho_G^2
  std::optional<double> overlap;   // tr rho rho_G
};

/// Lower bound 1/2 (1 - F_N)^2, F_N = min[1, exp(-N_KL/2 + (N/2) ln(e/2))].
double n_hs_lower(double nkl, int modes);
HilbertSchmidt n_hs(const FockState& state, double nkl);

/// Fock-basis reference Gaussian state at a cutoff large enough for the tail
/// tolerance (at least the state's cutoff).
FockState reference_gaussian_state(const FockState& state);

struct OverlapBound {
  double ratio = 0.0;  // tr(rho rho_G) / tr rho^2
  double bound = 0.0;  // (e/2)^{N/2} exp(-N_QR / 2)
};
OverlapBound overlap_bound(const FockState& state, double nqr);
OverlapBound overlap_bound(const FockState& state);

struct UncertaintyCheck {
  double lhs = 0.0;  // sqrt det Gamma
  double rhs = 0.0;  // h^{-1}(N_KL + S1)
};
UncertaintyCheck uncertainty_check(const FockState& state, double nkl);

struct Provenance {
  int cutoff = 0;
  int grid_points = 4096;
  double tail_tolerance = kTailTolerance;
  double phase_tolerance = 1e-6;
  double simplex_tolerance = 1e-5;
  std::uint64_t seed = 0;
};

struct MeasureReport {
  std::string state;
  int modes = 1;
  double mean_photon_number = 0.0;
  NklResult nkl;
  KurtosisEstimate kurtosis;
  double nqr = 0.0;
  std::optional<double> nhs_exact;
  double nhs_lower = 0.0;
  std::optional<double> genoni_lower;
  std::optional<OverlapBound> overlap;
  std::optional<UncertaintyCheck> uncertainty;
  Provenance provenance;
};

MeasureReport measure(const StateSpec& spec, int cutoff, const OptimizerOptions& options = {});
MeasureReport measure(const FockState& state, const std::string& label, const OptimizerOptions& options = {});

// Random-state benchmark of the kurtosis strategy.
struct RandomBenchConfig {
  int n_max = 5;
  int samples = 1000;
  std::uint64_t seed = 1;
  bool mixed = false;
  OptimizerOptions options;
};

struct RandomBenchSample {
  std::uint64_t seed = 0;
  double nkl = 0.0;
  double phi_opt = 0.0;
  double phi_kmax = 0.0;
  double phi_kmin = 0.0;
  double delta = 0.0;  // circular phase distance mod pi
  double ratio = 0.0;
  double augmented_ratio = 0.0;
  bool rotationally_symmetric = false;
};

struct RandomBenchSummary {
  int samples = 0;
  double delta_bin_width = 0.0;      // pi / 50
  std::vector<int> delta_histogram;  // over [0, pi / 2]
  double ratio_bin_width = 0.0;      // 0.02
  std::vector<int> ratio_histogram;  // over [0, 1]
  double share_delta_small = 0.0;    // delta < pi / 100
  double share_exact = 0.0;          // delta < 1e-4
  double share_ratio_high = 0.0;     // ratio > 0.95
  double mean_ratio = 0.0;
  double mean_augmented_ratio = 0.0;
};

/// Seed of draw i: splitmix64(seed ^ splitmix64(i + 1)).
std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t index);
RandomBenchSample random_bench_sample(const FockState& state, const OptimizerOptions& options);
RandomBenchSummary random_bench(const RandomBenchConfig& config, std::vector<RandomBenchSample>* samples = nullptr);
RandomBenchSummary summarize(const std::vector<RandomBenchSample>& samples);

/// Circular distance between phases modulo pi.
double phase_distance(double a, double b);

}  // namespace qng
