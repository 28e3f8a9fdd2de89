#pragma once

// Entropy functionals on gridded quadrature distributions. All values in nats.

#include <cstddef>
#include <span>
#include <vector>

#include "qng/quadrature.hpp"

namespace qng {

struct EntropyEstimate {
  double value = 0.0;
  /// |H(h) - H(2h)|, the change against the half-resolution grid.
  double error = 0.0;
};

/// -int p ln p by Simpson, 0 ln 0 := 0. NormalizationError if the mass is off
/// by more than 1e-9.
EntropyEstimate differential_entropy(const QuadratureDistribution& dist);

/// 1/2 ln(2 pi e variance).
double gaussian_entropy_1d(double variance);

/// H(X_G) - H(X), clipped at zero (raw negatives are logged).
double negentropy(const QuadratureDistribution& dist);
/// Same without clipping.
double negentropy_raw(const QuadratureDistribution& dist);

/// Gaussian with the same mean and variance, evaluated on the same grid.
QuadratureDistribution moment_matched_gaussian(const QuadratureDistribution& dist);

/// int p ln(p / q) on a shared grid. SupportError where q vanishes under p.
double kl_divergence(const QuadratureDistribution& p, const QuadratureDistribution& q);

/// Probability masses of bins [origin + k width, origin + (k + 1) width).
/// Bin edges lie on anchor + integer multiples of the width.
class BinnedDistribution {
 public:
  BinnedDistribution(double width, double origin, std::vector<double> masses);
  BinnedDistribution(double width, double origin, std::vector<double> masses, double anchor);

  double width() const noexcept { return width_; }
  double origin() const noexcept { return origin_; }
  double anchor() const noexcept { return anchor_; }
  const std::vector<double>& masses() const noexcept { return masses_; }
  std::size_t size() const noexcept { return masses_.size(); }

  /// Merges `factor` adjacent bins into bins of width factor * width whose
  /// edges still lie on the anchor lattice.
  BinnedDistribution coarsen(int factor) const;
  bool same_binning(const BinnedDistribution& other) const noexcept;

 private:
  double width_;
  double origin_;
  std::vector<double> masses_;
  double anchor_;
};

/// Bins aligned so that one edge sits at `anchor` (default: bins centred on
/// integer multiples of the width). Masses come from one interpolated CDF, so
/// binning at width w / M and coarsening by M reproduces binning at w when both
/// use the same anchor.
BinnedDistribution bin(const QuadratureDistribution& dist, double width);
BinnedDistribution bin(const QuadratureDistribution& dist, double width, double anchor);

/// Gaussian bin masses (error-function differences) on the binning of `like`.
BinnedDistribution gaussian_bins(double mean, double variance, const BinnedDistribution& like);

/// sum p_n ln(p_n / q_n); +inf when some q_n = 0 < p_n. ShapeError on a
/// binning mismatch.
double binned_kl(const BinnedDistribution& p, const BinnedDistribution& q);

struct SampleNegentropy {
  double value = 0.0;
  double half_width = 0.0;  // 95% delta-method confidence half width
  double bias_correction = 0.0;  // Miller-Madow term added to the plug-in entropy
  std::size_t samples = 0;
  int bins = 0;
};

/// Histogram plug-in negentropy of raw samples. SampleSizeError below 1000 samples.
SampleNegentropy sample_negentropy(std::span<const double> samples, int bins);

}  // namespace qng
