#pragma once

// Sparse ladder-operator algebra on enlarged Fock spaces, used for exact
// operator-side moments. Internal to the library.

#include <Eigen/Sparse>
#include <vector>

#include "qng/fock.hpp"

namespace qng::detail {

using SparseC = Eigen::SparseMatrix<cplx>;

/// a_mode (or its adjoint) on `modes` modes with `dim` levels per mode.
SparseC ladder(int modes, int dim, int mode, bool dagger);

/// sum_j coeffs_j (a_j e^{i phi_j} + a_j^dag e^{-i phi_j}) / sqrt(2).
SparseC quadrature_operator(int modes, int dim, const std::vector<double>& coeffs, const std::vector<double>& phis);

/// State body re-indexed into `to` levels per mode (zero padded).
CVector embed(const CVector& v, int modes, int from, int to);
CMatrix embed(const CMatrix& rho, int modes, int from, int to);

/// tr(rho A) for a density matrix, <v|A|v> for a vector.
cplx expectation(const CMatrix& rho, const SparseC& a);
cplx expectation(const CVector& v, const SparseC& a);

}  // namespace qng::detail
