#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "qng/entanglement.hpp"
#include "qng/error.hpp"
#include "qng/linalg.hpp"
#include "qng/states.hpp"

using namespace qng;

namespace {

// partial transpose, balanced beam splitter, reduce: the generic route
std::pair<FockState, FockState> pipeline_local_modes(double gamma, int cutoff) {
  const FockState ecs = build(StateSpec::entangled_coherent(gamma), cutoff);
  const FockState d = apply_unitary(partial_transpose(ecs, 1), ecs_diagonalizer(cutoff));
  return {partial_trace(d, 0), partial_trace(d, 1)};
}

}  // namespace

TEST(Entanglement, LocalCutoffs) {
  EXPECT_EQ(ecs_local_cutoff(0.5), 26);
  EXPECT_EQ(ecs_local_cutoff(1.0), 38);
  EXPECT_GE(ecs_local_cutoff(0.01), 8);
}

TEST(Entanglement, ClosedFormMatchesPipeline) {
  for (double gamma : {0.5, 0.8, 1.0}) {
    const int cutoff = 48;
    const auto [p1, p2] = pipeline_local_modes(gamma, cutoff);
    const auto [c1, c2] = ecs_local_modes(gamma, cutoff);
    // truncation of the two-mode state only disturbs the highest levels
    const int k = 20;
    EXPECT_NEAR((p1.density().topLeftCorner(k, k) - c1.density().topLeftCorner(k, k)).cwiseAbs().maxCoeff(), 0.0, 1e-10)
        << gamma;
    EXPECT_NEAR((p2.density().topLeftCorner(k, k) - c2.density().topLeftCorner(k, k)).cwiseAbs().maxCoeff(), 0.0, 1e-10)
        << gamma;
  }
}

TEST(Entanglement, FirstLocalModeIsNotPositive) {
  const auto [r1, r2] = ecs_local_modes(1.0, ecs_local_cutoff(1.0));
  EXPECT_FALSE(r1.positivity_checked());
  EXPECT_NEAR(r1.density().trace().real(), 1.0, 1e-12);
  EXPECT_NEAR(r2.density().trace().real(), 1.0, 1e-12);
  const RVector ev = linalg::hermitian_eigenvalues(r1.density());
  EXPECT_LT(ev(0), -1e-3);
  // its x-quadrature stays a distribution
  const auto d = distribution(r1, QuadratureDirection::single(0.0));
  for (double p : d.density()) EXPECT_GE(p, -1e-12);
}

TEST(Entanglement, WitnessAgreesWithPipeline) {
  const double gamma = 0.5;
  const int cutoff = 40;
  const WitnessReport closed = ecs_witness(gamma);
  const WitnessReport generic =
      enhanced_ppt_witness(build(StateSpec::entangled_coherent(gamma), cutoff), ecs_diagonalizer(cutoff));
  EXPECT_EQ(closed.enhanced_detects, generic.enhanced_detects);
  EXPECT_EQ(closed.decisive_mode, generic.decisive_mode);
  EXPECT_NEAR(closed.lhs, generic.lhs, 1e-8);
  EXPECT_NEAR(closed.rhs, generic.rhs, 1e-6);
  EXPECT_NEAR(closed.ppt_nu_min, generic.ppt_nu_min, 1e-8);
}

TEST(Entanglement, GaussianPptSeesTmsv) {
  const int cutoff = 24;
  const WitnessReport w = enhanced_ppt_witness(build(StateSpec::tmsv(0.5), cutoff), identity_operator(2, cutoff) * ecs_diagonalizer(cutoff));
  EXPECT_TRUE(w.gaussian_ppt_detects);
  EXPECT_NEAR(w.ppt_nu_min, 0.5 * std::exp(-1.0), 1e-8);
}

TEST(Entanglement, Validation) {
  const int cutoff = 8;
  const FockState s = build(StateSpec::pnes(0.3), cutoff);
  const ModeOperator generic{2, cutoff, CMatrix::Identity(cutoff * cutoff, cutoff * cutoff), OperatorKind::Generic};
  EXPECT_THROW(enhanced_ppt_witness(s, generic), DomainError);
  EXPECT_THROW(enhanced_ppt_witness(build(StateSpec::fock(1), cutoff), ecs_diagonalizer(cutoff)), ShapeError);
  EXPECT_THROW(ecs_local_modes(0.0, 20), DomainError);
  EXPECT_THROW(ecs_local_modes(2.0, 10), TruncationError);
  EXPECT_THROW(witness_scan({0.6, 0.5}), DomainError);
}

TEST(Entanglement, NoThresholdReportsSide) {
  const auto scan = witness_scan({1.0, 1.1});
  try {
    witness_threshold(scan);
    FAIL();
  } catch (const NoThreshold& e) {
    EXPECT_TRUE(e.detects());
  }
}

TEST(Entanglement, CsvShape) {
  std::ostringstream os;
  write_witness_csv(os, witness_scan({0.9}));
  const std::string s = os.str();
  EXPECT_EQ(s.substr(0, s.find('\n')), "gamma,sqrt_det,lhs,rhs,margin,ppt_nu_min,gaussian_ppt,enhanced,unphysical_by_density");
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 2);
}
