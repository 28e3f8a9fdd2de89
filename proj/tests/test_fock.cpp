#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qng/error.hpp"
#include "qng/fock.hpp"
#include "qng/gaussian_ref.hpp"
#include "qng/rng.hpp"
#include "qng/states.hpp"

using namespace qng;

namespace {

CMatrix random_density(int dim, std::uint64_t seed) {
  Rng rng(seed);
  CMatrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = cplx(rng.normal(), rng.normal());
  CMatrix rho = a * a.adjoint();
  return rho / rho.trace().real();
}

}  // namespace

TEST(Fock, AnnihilationLowersLevels) {
  const ModeOperator a = annihilation(6);
  for (int n = 1; n < 6; ++n) EXPECT_NEAR(a.matrix(n - 1, n).real(), std::sqrt(n), 1e-15);
  EXPECT_NEAR(a.matrix.cwiseAbs().sum(), [] {
    double s = 0;
    for (int n = 1; n < 6; ++n) s += std::sqrt(n);
    return s;
  }(), 1e-12);
}

TEST(Fock, MakePureValidates) {
  std::vector<cplx> zero(4, 0.0);
  EXPECT_THROW(make_pure(zero, 1, 4), DegenerateInput);
  std::vector<cplx> three(3, 1.0);
  EXPECT_THROW(make_pure(three, 1, 4), ShapeError);
  std::vector<cplx> v{1.0, cplx(0, 1)};
  const FockState s = make_pure(v, 1, 2);
  EXPECT_NEAR(s.amplitudes().norm(), 1.0, 1e-15);
}

TEST(Fock, PartialTraceNeedsTwoModes) {
  EXPECT_THROW(partial_trace(build(StateSpec::fock(1), 4), 0), ShapeError);
}

TEST(Fock, BeamSplitterBlockMatchesGeneratorExponential) {
  // independent route: exponentiate the generator built from ladder matrices
  const int cutoff = 9;
  const double theta = 0.37;
  const ModeOperator a1 = on_mode(annihilation(cutoff), 0), a2 = on_mode(annihilation(cutoff), 1);
  const CMatrix g = theta * (a1.matrix.adjoint() * a2.matrix - a2.matrix.adjoint() * a1.matrix);
  const CMatrix u = linalg::expm(g);
  for (int total = 0; total < cutoff; ++total) {
    const RMatrix block = beam_splitter_block(total, theta);
    for (int m = 0; m <= total; ++m)
      for (int n = 0; n <= total; ++n) {
        const cplx ref = u(static_cast<Eigen::Index>(two_mode_index(m, total - m, cutoff)),
                           static_cast<Eigen::Index>(two_mode_index(n, total - n, cutoff)));
        EXPECT_NEAR(block(m, n), ref.real(), 1e-12) << total << ' ' << m << ' ' << n;
        EXPECT_NEAR(ref.imag(), 0.0, 1e-12);
      }
  }
}

TEST(Fock, BeamSplitterOperatorUsesBlocks) {
  const int cutoff = 7;
  const double theta = 1.1;
  const ModeOperator b = beam_splitter(theta, cutoff);
  EXPECT_EQ(b.kind, OperatorKind::Gaussian);
  for (int total = 0; total < cutoff; ++total) {
    const RMatrix block = beam_splitter_block(total, theta);
    for (int m = 0; m <= total; ++m)
      for (int n = 0; n <= total; ++n)
        EXPECT_NEAR(b.matrix(static_cast<Eigen::Index>(two_mode_index(m, total - m, cutoff)),
                             static_cast<Eigen::Index>(two_mode_index(n, total - n, cutoff)))
                        .real(),
                    block(m, n), 1e-12);
  }
}

TEST(Fock, BalancedBeamSplitterMovesCoherentAmplitude) {
  // B(pi/4)|g, g> = |sqrt2 g, 0>
  const int cutoff = 30;
  const double g = 0.9;
  const FockState in = tensor(build(StateSpec::coherent(g), cutoff), build(StateSpec::coherent(g), cutoff));
  const FockState out = apply_unitary(in, beam_splitter(std::numbers::pi / 4, cutoff));
  const FockState expect = tensor(build(StateSpec::coherent(std::sqrt(2.0) * g), cutoff), build(StateSpec::fock(0), cutoff));
  EXPECT_GT(fidelity(expect, out), 1.0 - 1e-10);
}

TEST(Fock, PhaseRotationIsDiagonal) {
  const ModeOperator r = phase_rotation(0.3, 5);
  for (int n = 0; n < 5; ++n) {
    EXPECT_NEAR(std::abs(r.matrix(n, n) - std::polar(1.0, 0.3 * n)), 0.0, 1e-15);
  }
}

TEST(Fock, TwoModeSqueezerAmplitudes) {
  // S12(s e^{i phi})|00> = sum_n (-e^{i phi} tanh s)^n / cosh s |nn>
  const int cutoff = 20;
  const double s = 0.6, phi = 0.4;
  const FockState vac = build(StateSpec::fock(0), cutoff);
  const FockState tmsv = apply_unitary(tensor(vac, vac), two_mode_squeezer(s, phi, cutoff));
  const CMatrix rho = tmsv.density();
  CVector ref = CVector::Zero(cutoff * cutoff);
  for (int n = 0; n < cutoff; ++n)
    ref(static_cast<Eigen::Index>(two_mode_index(n, n, cutoff))) = std::pow(-std::polar(std::tanh(s), phi), n) / std::cosh(s);
  EXPECT_NEAR((rho - ref * ref.adjoint()).cwiseAbs().maxCoeff(), 0.0, 1e-10);
}

TEST(Fock, PartialTraceOfTmsvIsThermal) {
  const FockState t = build(StateSpec::tmsv(0.5), 30);
  const FockState red = partial_trace(t, 0);
  const double nbar = std::pow(std::sinh(0.5), 2);
  const auto p = red.photon_distribution();
  for (int n = 0; n < 10; ++n) EXPECT_NEAR(p[n], std::pow(nbar, n) / std::pow(nbar + 1, n + 1), 1e-12);
  EXPECT_NEAR(red.mean_photon_number(), nbar, 1e-10);
}

TEST(Fock, PartialTransposeSwapsSecondIndices) {
  const int c = 3;
  const CMatrix rho = random_density(c * c, 5);
  const FockState s = FockState::from_density(rho, 2, c);
  const CMatrix pt = partial_transpose(s, 1).density();
  for (int m1 = 0; m1 < c; ++m1)
    for (int n1 = 0; n1 < c; ++n1)
      for (int m2 = 0; m2 < c; ++m2)
        for (int n2 = 0; n2 < c; ++n2) {
          const auto i = [&](int a, int b) { return static_cast<Eigen::Index>(two_mode_index(a, b, c)); };
          EXPECT_NEAR(std::abs(pt(i(m1, n1), i(m2, n2)) - rho(i(m1, n2), i(m2, n1))), 0.0, 1e-15);
        }
}

TEST(Fock, MixAndTensorKeepTrace) {
  const FockState a = build(StateSpec::fock(1), 4), b = build(StateSpec::fock(2), 4);
  const FockState m = mix(0.3, a, b);
  EXPECT_NEAR(m.density().trace().real(), 1.0, 1e-15);
  EXPECT_NEAR(m.mean_photon_number(), 0.3 + 1.4, 1e-14);
  const FockState t = tensor(a, b);
  EXPECT_NEAR(t.mean_photon_number(0), 1.0, 1e-14);
  EXPECT_NEAR(t.mean_photon_number(1), 2.0, 1e-14);
  EXPECT_NEAR(t.purity(), 1.0, 1e-14);
}

TEST(Fock, TruncatedOperatorRejected) {
  // D(2) cut at six levels is far from unitary on the vacuum column
  const FockState s = build(StateSpec::fock(0), 6);
  EXPECT_THROW(apply_unitary(s, displacement(2.0, 6)), NumericsError);
  EXPECT_NO_THROW(apply_unitary(build(StateSpec::fock(0), 40), displacement(0.3, 40)));
}

TEST(Fock, NotAStateRejected) {
  CMatrix rho = CMatrix::Zero(2, 2);
  rho(0, 0) = 1.5;
  rho(1, 1) = -0.5;
  EXPECT_THROW(FockState::from_density(rho, 1, 2), NotAState);
  EXPECT_NO_THROW(FockState::from_density(rho, 1, 2, 0.0, Positivity::Unchecked));
}

TEST(Fock, PhotonSubtractedTmsvIsRotatedSqueezedPnes) {
  for (const auto& [s, phi] : std::vector<std::pair<double, double>>{{0.3, 0.0}, {0.5, 0.7}, {0.8, -1.2}}) {
    const int cutoff = 40;
    const FockState ps = build(StateSpec::photon_subtracted_tmsv(s, phi), cutoff);
    const FockState pnes = build(StateSpec::pnes(pnes_fraction_for_squeezing(s)), cutoff);
    const ModeOperator u = two_mode_squeezer(s, phi, cutoff) * on_mode(phase_rotation(phi + std::numbers::pi, cutoff), 0);
    EXPECT_GT(fidelity(ps, apply_unitary(pnes, u)), 1.0 - 1e-8) << s << ' ' << phi;
  }
}
