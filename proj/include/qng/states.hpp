#pragma once

// Catalog of the state families studied here, with closed-form quadrature
// distributions used as independent oracles for the generic engine.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qng/fock.hpp"

namespace qng {

class QuadratureDirection;
class QuadratureGrid;
class QuadratureDistribution;

enum class Family {
  Fock,                   // n
  PhaseAveragedCoherent,  // gamma
  EvenCat,                // gamma
  OddCat,                 // gamma
  Pnes,                   // f: sqrt(1-f)|00> + sqrt(f)|11>
  PhotonSubtractedTmsv,   // (s, varphi): a1 a2 S12(zeta)|00>
  EntangledCoherent,      // gamma: |gamma,gamma> - |-gamma,-gamma>
  NoisySinglePhoton,      // f: (1-f)|0><0| + f|1><1|
  RandomPure,             // (n_max, seed)
  RandomMixed,            // (n_max, seed)
  // Gaussian references
  Coherent,               // alpha (real)
  SqueezedVacuum,         // r
  Thermal,                // nbar
  Tmsv,                   // s
};

struct StateSpec {
  Family family = Family::Fock;
  double a = 0.0;  // first real parameter (n, gamma, f, s, r, nbar, n_max)
  double b = 0.0;  // second real parameter (varphi for PhotonSubtractedTmsv)
  std::uint64_t seed = 0;

  static StateSpec fock(int n) { return {Family::Fock, static_cast<double>(n)}; }
  static StateSpec phase_averaged_coherent(double gamma) { return {Family::PhaseAveragedCoherent, gamma}; }
  static StateSpec even_cat(double gamma) { return {Family::EvenCat, gamma}; }
  static StateSpec odd_cat(double gamma) { return {Family::OddCat, gamma}; }
  static StateSpec pnes(double f) { return {Family::Pnes, f}; }
  static StateSpec photon_subtracted_tmsv(double s, double varphi) { return {Family::PhotonSubtractedTmsv, s, varphi}; }
  static StateSpec entangled_coherent(double gamma) { return {Family::EntangledCoherent, gamma}; }
  static StateSpec noisy_single_photon(double f) { return {Family::NoisySinglePhoton, f}; }
  static StateSpec random_pure(int n_max, std::uint64_t seed) { return {Family::RandomPure, static_cast<double>(n_max), 0.0, seed}; }
  static StateSpec random_mixed(int n_max, std::uint64_t seed) { return {Family::RandomMixed, static_cast<double>(n_max), 0.0, seed}; }
  static StateSpec coherent(double alpha) { return {Family::Coherent, alpha}; }
  static StateSpec squeezed_vacuum(double r) { return {Family::SqueezedVacuum, r}; }
  static StateSpec thermal(double nbar) { return {Family::Thermal, nbar}; }
  static StateSpec tmsv(double s) { return {Family::Tmsv, s}; }

  int modes() const;
  /// Validates the parameter ranges; throws DomainError.
  void validate() const;
};

/// Parses the canonical text form, e.g. `fock:3`, `evencat:1.2`, `pnes:0.4`,
/// `randpure:5:seed=42`, `pstmsv:0.5:0`, `vacuum`. Throws ParseError.
StateSpec parse_state_spec(std::string_view text);
std::string to_string(const StateSpec& spec);
std::string family_name(Family family);

/// Default cutoff: 64 for one mode, 24 per mode for two (40 for entangled coherent states).
int default_cutoff(const StateSpec& spec);

/// Builds the state. Raises TruncationError (with a required-cutoff hint) when
/// the population above the cutoff exceeds `tail_tolerance`.
FockState build(const StateSpec& spec, int cutoff, double tail_tolerance = kTailTolerance);
inline FockState build(const StateSpec& spec) { return build(spec, default_cutoff(spec)); }

/// Closed-form quadrature density for Fock, phase-averaged coherent, cat and
/// PNES states; other families raise NotAnalytic.
QuadratureDistribution analytic_quadrature(const StateSpec& spec, const QuadratureDirection& direction,
                                           const QuadratureGrid& grid);

/// Parameter sweep across every catalog family (59 states), used by the
/// bound checks.
std::vector<StateSpec> catalog_sweep();

/// Real Gaussian coefficients on levels 0..n_max, normalized.
FockState random_pure(int n_max, std::uint64_t seed, int cutoff = 0);
/// f|chi1><chi1| + (1-f)|chi2><chi2| with f uniform and independent pure draws.
FockState random_mixed(int n_max, std::uint64_t seed, int cutoff = 0);
/// Deterministic real amplitudes of random_pure (length n_max + 1).
RVector random_real_amplitudes(int n_max, std::uint64_t seed);

/// Closed-form mean photon number of cat states.
double cat_mean_photon_number(double gamma, bool even);
/// Inverse of cat_mean_photon_number in gamma (bisection).
double cat_gamma_for_energy(double energy, bool even);
/// f = sinh^2 s / cosh 2s, the PNES fraction sharing the non-Gaussianity of the
/// photon-subtracted two-mode squeezed vacuum.
double pnes_fraction_for_squeezing(double s);

}  // namespace qng
