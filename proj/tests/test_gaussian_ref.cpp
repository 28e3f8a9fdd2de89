#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qng/error.hpp"
#include "qng/gaussian_ref.hpp"
#include "qng/states.hpp"

using namespace qng;

TEST(GaussianRef, EntropyFunction) {
  EXPECT_NEAR(h(0.5), 0.0, 1e-15);
  EXPECT_NEAR(h(1.5), 2 * std::log(2.0), 1e-14);
  for (double x : {0.5, 0.51, 1.0, 7.3, 400.0}) EXPECT_NEAR(h_inverse(h(x)), x, 1e-10 * x);
  EXPECT_THROW(h(0.3), DomainError);
  EXPECT_THROW(h_inverse(-0.1), DomainError);
}

TEST(GaussianRef, SqueezedVacuumCovariance) {
  // S(r) with real r squeezes x
  const double r = 0.5;
  const CovarianceData c = covariance(build(StateSpec::squeezed_vacuum(r)));
  EXPECT_NEAR(c.gamma(0, 0), 0.5 * std::exp(-2 * r), 1e-10);
  EXPECT_NEAR(c.gamma(1, 1), 0.5 * std::exp(2 * r), 1e-10);
  EXPECT_NEAR(c.gamma(0, 1), 0.0, 1e-12);
  EXPECT_NEAR(symplectic_eigenvalues(c).min(), 0.5, 1e-10);
}

TEST(GaussianRef, CoherentMeans) {
  const CovarianceData c = covariance(build(StateSpec::coherent(1.0)));
  EXPECT_NEAR(c.means(0), std::sqrt(2.0), 1e-10);
  EXPECT_NEAR(c.means(1), 0.0, 1e-12);
}

TEST(GaussianRef, TmsvSpectra) {
  const double s = 0.6;
  const FockState t = build(StateSpec::tmsv(s));
  const auto nus = symplectic_eigenvalues(covariance(t)).nus;
  ASSERT_EQ(nus.size(), 2u);
  EXPECT_NEAR(nus[0], 0.5, 1e-9);
  EXPECT_NEAR(nus[1], 0.5, 1e-9);
  EXPECT_NEAR(symplectic_eigenvalues(covariance(partial_trace(t, 0))).min(), 0.5 * std::cosh(2 * s), 1e-9);
  EXPECT_NEAR(von_neumann_entropy(partial_trace(t, 0)), h(0.5 * std::cosh(2 * s)), 1e-9);
}

TEST(GaussianRef, ThermalEntropies) {
  const double nbar = 1.0;
  const FockState t = build(StateSpec::thermal(nbar));
  EXPECT_NEAR(von_neumann_entropy(t), h(nbar + 0.5), 1e-10);
  EXPECT_NEAR(renyi2_entropy(t), std::log(2 * nbar + 1), 1e-10);
  EXPECT_NEAR(renyi2_entropy(build(StateSpec::fock(3))), 0.0, 1e-12);
}

TEST(GaussianRef, ReferenceStateReproducesCovariance) {
  // rotated squeezing exercises the sign of the squeeze angle
  const int cutoff = 80;
  for (double angle : {0.0, 0.9, -2.1}) {
    const FockState base = mix(0.3, build(StateSpec::fock(1), cutoff), build(StateSpec::fock(3), cutoff));
    const FockState s = apply_unitary(base, squeezer(0.35, angle, cutoff) * displacement(cplx(0.2, -0.4), cutoff));
    const CovarianceData c = covariance(s);
    const FockState g = reference_gaussian_fock(c, 160);
    const CovarianceData cg = covariance(g);
    EXPECT_NEAR((cg.gamma - c.gamma).cwiseAbs().maxCoeff(), 0.0, 1e-9) << angle;
    EXPECT_NEAR((cg.means - c.means).cwiseAbs().maxCoeff(), 0.0, 1e-9) << angle;
    EXPECT_NEAR(von_neumann_entropy(g), gaussian_entropy(c), 1e-8);
  }
}

TEST(GaussianRef, DecomposeThermal) {
  const GaussianDecomposition d = decompose(covariance(build(StateSpec::thermal(0.7))));
  EXPECT_NEAR(d.nbar, 0.7, 1e-9);
  EXPECT_NEAR(d.r, 0.0, 1e-9);
  EXPECT_NEAR(std::abs(d.alpha), 0.0, 1e-12);
}

TEST(GaussianRef, EntropyGapFloor) {
  const double floor = std::log(2.0 / std::numbers::e);
  double prev = -1.0;
  for (int i = 0; i < 40; ++i) {
    const double nbar = std::pow(10.0, -3.0 + 6.0 * i / 39.0);
    EXPECT_GE(gaussian_entropy_gap({{nbar + 0.5}}), floor);
    const double d = thermal_entropy_difference(nbar);
    EXPECT_GT(d, prev);
    prev = d;
  }
  EXPECT_NEAR(gaussian_entropy_gap({{1000.5}}), floor, 1e-3);
  EXPECT_NEAR(gaussian_entropy_gap({{1000.5, 1000.5}}), 2 * floor, 2e-3);
}
