#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qng/error.hpp"
#include "qng/info_theory.hpp"
#include "qng/states.hpp"

using namespace qng;

namespace {

QuadratureDistribution gaussian(double mean, double var, int points = 4096) {
  const QuadratureGrid g(mean, 12.0 * std::sqrt(var), points);
  std::vector<double> p(g.nodes());
  for (int i = 0; i < g.nodes(); ++i) {
    const double d = g.x(i) - mean;
    p[i] = std::exp(-d * d / (2 * var)) / std::sqrt(2 * std::numbers::pi * var);
  }
  return QuadratureDistribution(g, p);
}

QuadratureDistribution fock1() { return distribution(build(StateSpec::fock(1)), QuadratureDirection::single(0.0)); }

}  // namespace

TEST(InfoTheory, GaussianEntropy) {
  for (double var : {0.1, 0.5, 3.0}) {
    const auto d = gaussian(0.4, var);
    EXPECT_NEAR(differential_entropy(d).value, gaussian_entropy_1d(var), 1e-10);
    EXPECT_NEAR(negentropy_raw(d), 0.0, 1e-10);
    EXPECT_LT(differential_entropy(d).error, 1e-8);
  }
}

TEST(InfoTheory, UnnormalizedRejected) {
  const auto d = gaussian(0.0, 1.0);
  std::vector<double> p = d.density();
  for (auto& x : p) x *= 1.01;
  EXPECT_THROW(differential_entropy(QuadratureDistribution(d.grid(), p)), NormalizationError);
  EXPECT_NO_THROW(differential_entropy(QuadratureDistribution::normalized(d.grid(), p)));
}

TEST(InfoTheory, KlToMatchedGaussianIsNegentropy) {
  const auto p = fock1();
  const auto q = moment_matched_gaussian(p);
  EXPECT_NEAR(q.variance(), p.variance(), 1e-10);
  EXPECT_NEAR(kl_divergence(p, q), negentropy_raw(p), 1e-9);
  EXPECT_NEAR(negentropy(p), 0.2789432988725762, 1e-7);
}

TEST(InfoTheory, KlSupportError) {
  const auto p = gaussian(0.0, 1.0);
  std::vector<double> q = p.density();
  q[p.grid().nodes() / 2] = 0.0;
  EXPECT_THROW(kl_divergence(p, QuadratureDistribution(p.grid(), q)), SupportError);
}

TEST(InfoTheory, CoarseningMatchesDirectBinning) {
  const auto p = fock1();
  const BinnedDistribution fine = bin(p, 0.05, 0.0), coarse = bin(p, 0.2, 0.0);
  const BinnedDistribution merged = fine.coarsen(4);
  ASSERT_TRUE(merged.same_binning(coarse));
  for (std::size_t i = 0; i < coarse.size(); ++i) EXPECT_NEAR(merged.masses()[i], coarse.masses()[i], 1e-14);
}

TEST(InfoTheory, BinnedKlRefinesTowardsContinuous) {
  const auto p = fock1();
  const double j = negentropy_raw(p);
  double previous = 0.0;
  for (double w : {1.6, 0.8, 0.4, 0.2, 0.1, 0.05, 0.025, 0.0125}) {
    const BinnedDistribution b = bin(p, w, 0.0);
    const double kl = binned_kl(b, gaussian_bins(p.mean(), p.variance(), b));
    EXPECT_GE(kl, previous - 1e-13) << w;
    EXPECT_LE(kl, j + 1e-9) << w;
    previous = kl;
  }
  EXPECT_NEAR(previous, j, 1e-4);
}

TEST(InfoTheory, GaussianBinTailsKeepPrecision) {
  // upper-tail bins far past the mean must not cancel to zero
  const auto p = gaussian(0.0, 0.25, 8192);
  const BinnedDistribution b = bin(p, 0.1, 0.0);
  const BinnedDistribution g = gaussian_bins(0.0, 0.25, b);
  double hi = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double a = g.origin() + static_cast<double>(k) * g.width();
    if (std::abs(a - 2.5) < 1e-9) hi = g.masses()[k];
  }
  // [2.5, 2.6] at sd 0.5: z from 5 to 5.2
  const double ref = 0.5 * (std::erfc(5.0 / std::sqrt(2.0)) - std::erfc(5.2 / std::sqrt(2.0)));
  EXPECT_NEAR(hi / ref, 1.0, 1e-12);
  EXPECT_LT(binned_kl(b, g), 1e-9);
}

TEST(InfoTheory, BinnedKlShapeMismatch) {
  const auto p = fock1();
  EXPECT_THROW(binned_kl(bin(p, 0.1), bin(p, 0.2)), ShapeError);
}

TEST(InfoTheory, SampleNegentropy) {
  const auto p = fock1();
  EXPECT_THROW(sample_negentropy(draw_samples(p, 500, 1), 20), SampleSizeError);
  const auto xs = draw_samples(p, 200000, 2);
  const SampleNegentropy s = sample_negentropy(xs, 200);
  EXPECT_NEAR(s.value, 0.2789432988725762, 3 * s.half_width + 5e-3);
  EXPECT_GT(s.bias_correction, 0.0);
}
