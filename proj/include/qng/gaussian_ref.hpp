#pragma once

// Reference Gaussian state: covariance, symplectic spectrum, Gaussian entropy
// function h, von Neumann / Renyi-2 entropies and the Fock-basis rho_G.
//
// Phase-space ordering r = (x1, p1, x2, p2), hbar = 1, vacuum variance 1/2.

#include <vector>

#include "qng/fock.hpp"

namespace qng {

struct CovarianceData {
  RVector means;  // <r_j>
  RMatrix gamma;  // <{r_j, r_k}>/2 - <r_j><r_k>
  int modes() const noexcept { return static_cast<int>(means.size() / 2); }
};

/// Raises TruncationError for truncation-unsafe states. Partially transposed
/// (unchecked) states are accepted.
CovarianceData covariance(const FockState& state);

struct SymplecticSpectrum {
  std::vector<double> nus;  // ascending
  double min() const { return nus.front(); }
};

/// Closed forms for one and two modes.
SymplecticSpectrum symplectic_eigenvalues(const CovarianceData& cov);

/// (x + 1/2) ln(x + 1/2) - (x - 1/2) ln(x - 1/2); DomainError below 1/2.
double h(double x);
/// Inverse of h on [1/2, inf); DomainError for negative arguments.
double h_inverse(double y);

/// Sum of h over the symplectic spectrum: von Neumann entropy of the Gaussian
/// state with this covariance.
double gaussian_entropy(const CovarianceData& cov);

double von_neumann_entropy(const FockState& state);
/// -ln tr(rho^2).
double renyi2_entropy(const FockState& state);

/// Single-mode rho_G = D(alpha) S(r e^{i angle}) tau(nbar) S^dag D^dag.
struct GaussianDecomposition {
  double nbar = 0.0;
  double r = 0.0;
  double angle = 0.0;
  cplx alpha = 0.0;
};
GaussianDecomposition decompose(const CovarianceData& cov);

/// Fock-basis reference Gaussian state of a single-mode covariance. Built at an
/// inflated cutoff and truncated; TruncationError if the truncated population
/// exceeds the tail tolerance.
FockState reference_gaussian_fock(const CovarianceData& cov, int cutoff);

/// sum_i [ln(2 nu_i) - h(nu_i)], i.e. S2 - S1 of the Gaussian state.
double gaussian_entropy_gap(const SymplecticSpectrum& spectrum);

/// D(nbar) = S1 - S2 of the thermal state, increasing towards ln(e/2).
double thermal_entropy_difference(double nbar);

}  // namespace qng
