#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "qng/error.hpp"
#include "qng/info_theory.hpp"
#include "qng/quadrature.hpp"
#include "qng/states.hpp"

using namespace qng;

namespace {

struct OracleRow {
  std::string spec;
  double theta, phi1, phi2, variance, negentropy;
};

std::vector<OracleRow> oracle_rows() {
  std::ifstream in(std::string(QNG_FIXTURES) + "/oracle_negentropy.csv");
  std::vector<OracleRow> rows;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    OracleRow r;
    std::string f;
    std::getline(ss, r.spec, ',');
    std::getline(ss, f, ',');
    r.theta = std::stod(f);
    std::getline(ss, f, ',');
    r.phi1 = std::stod(f);
    std::getline(ss, f, ',');
    r.phi2 = std::stod(f);
    std::getline(ss, f, ',');
    r.variance = std::stod(f);
    std::getline(ss, f, ',');
    r.negentropy = std::stod(f);
    rows.push_back(r);
  }
  return rows;
}

QuadratureDirection direction_of(const StateSpec& spec, const OracleRow& r) {
  return spec.modes() == 1 ? QuadratureDirection::single(r.phi1) : QuadratureDirection::two_mode(r.theta, r.phi1, r.phi2);
}

}  // namespace

TEST(States, SpecRoundTrip) {
  for (const char* text : {"vacuum", "fock:3", "pacs:1.5", "evencat:1.2", "oddcat:0.8", "noisy1:0.25", "pnes:0.4",
                           "pstmsv:0.5:0.7", "ecs:0.9", "randpure:5:seed=42", "randmixed:3:seed=7", "coherent:1",
                           "squeezed:0.5", "thermal:1", "tmsv:0.5"}) {
    const StateSpec s = parse_state_spec(text);
    EXPECT_EQ(to_string(parse_state_spec(to_string(s))), to_string(s)) << text;
  }
}

TEST(States, SpecErrors) {
  EXPECT_THROW(parse_state_spec("nosuch:1"), ParseError);
  EXPECT_THROW(parse_state_spec("fock:"), ParseError);
  EXPECT_THROW(parse_state_spec("fock:x"), ParseError);
  EXPECT_THROW(parse_state_spec("pnes:1.5"), ParseError);
  EXPECT_THROW(StateSpec::pnes(1.5).validate(), DomainError);
  EXPECT_THROW(StateSpec::fock(-1).validate(), DomainError);
}

TEST(States, DefaultCutoffs) {
  EXPECT_EQ(default_cutoff(StateSpec::fock(2)), 64);
  EXPECT_EQ(default_cutoff(StateSpec::pnes(0.5)), 24);
  EXPECT_EQ(default_cutoff(StateSpec::entangled_coherent(1.0)), 40);
}

TEST(States, TruncationErrorCarriesHint) {
  try {
    build(StateSpec::even_cat(4.0), 12);
    FAIL();
  } catch (const TruncationError& e) {
    // <n> = 16: the hint must be minimal, not just larger
    EXPECT_GT(e.required_cutoff(), 40);
    EXPECT_NO_THROW(build(StateSpec::even_cat(4.0), e.required_cutoff()));
    EXPECT_THROW(build(StateSpec::even_cat(4.0), e.required_cutoff() - 1), TruncationError);
  }
  // same for odd parity, whose even levels vanish
  try {
    build(StateSpec::odd_cat(3.0), 20);
    FAIL();
  } catch (const TruncationError& e) {
    EXPECT_NO_THROW(build(StateSpec::odd_cat(3.0), e.required_cutoff()));
    EXPECT_THROW(build(StateSpec::odd_cat(3.0), e.required_cutoff() - 1), TruncationError);
  }
}

TEST(States, CatEnergies) {
  for (double g : {0.3, 1.0, 2.0}) {
    const double t = std::tanh(g * g);
    EXPECT_NEAR(cat_mean_photon_number(g, true), g * g * t, 1e-12);
    EXPECT_NEAR(cat_mean_photon_number(g, false), g * g / t, 1e-12);
    EXPECT_NEAR(build(StateSpec::even_cat(g)).mean_photon_number(), g * g * t, 1e-10);
    EXPECT_NEAR(build(StateSpec::odd_cat(g)).mean_photon_number(), g * g / t, 1e-10);
    EXPECT_NEAR(cat_gamma_for_energy(cat_mean_photon_number(g, true), true), g, 1e-9);
  }
}

TEST(States, PnesFraction) {
  const double s = 0.5;
  EXPECT_NEAR(pnes_fraction_for_squeezing(s), std::pow(std::sinh(s), 2) / std::cosh(2 * s), 1e-15);
}

TEST(States, CatalogSweep) {
  const auto cat = catalog_sweep();
  EXPECT_GE(cat.size(), 50u);
  std::set<std::string> names;
  for (const auto& s : cat) names.insert(to_string(s));
  EXPECT_EQ(names.size(), cat.size());
}

TEST(States, RandomStatesAreDeterministic) {
  const RVector a = random_real_amplitudes(5, 11), b = random_real_amplitudes(5, 11);
  EXPECT_EQ(a, b);
  EXPECT_NEAR(a.norm(), 1.0, 1e-15);
  EXPECT_NE(random_real_amplitudes(5, 12), a);
  const FockState m = random_mixed(4, 3);
  EXPECT_LT(m.purity(), 1.0);
}

TEST(States, AnalyticNotAvailableForGaussians) {
  const QuadratureGrid g(0.0, 8.0, 256);
  EXPECT_THROW(analytic_quadrature(StateSpec::thermal(1.0), QuadratureDirection::single(0), g), NotAnalytic);
}

// Closed forms against an independent scipy integration of the same densities.
TEST(States, AnalyticNegentropyMatchesOracle) {
  const auto rows = oracle_rows();
  ASSERT_GE(rows.size(), 30u);
  for (const auto& r : rows) {
    const StateSpec spec = parse_state_spec(r.spec);
    const FockState state = build(spec);
    const QuadratureDirection d = direction_of(spec, r);
    const QuadratureDistribution a = analytic_quadrature(spec, d, default_grid(state, d, 65536));
    EXPECT_NEAR(a.variance(), r.variance, 1e-9) << r.spec;
    EXPECT_NEAR(negentropy_raw(a), r.negentropy, 1e-8) << r.spec << ' ' << r.phi1;
  }
}

TEST(States, EngineNegentropyMatchesOracle) {
  for (const auto& r : oracle_rows()) {
    const StateSpec spec = parse_state_spec(r.spec);
    const FockState state = build(spec);
    const QuadratureEngine engine(state, state_grid(state, 65536));
    const QuadratureDistribution d = engine.distribution(direction_of(spec, r));
    EXPECT_NEAR(d.variance(), r.variance, 1e-9) << r.spec;
    EXPECT_NEAR(negentropy_raw(d), r.negentropy, 1e-8) << r.spec << ' ' << r.theta << ' ' << r.phi1;
  }
}
