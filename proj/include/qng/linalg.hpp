#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qng {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

namespace linalg {

/// Matrix exponential by scaling and squaring with a truncated Taylor series.
/// Intended for the small anti-Hermitian generators of Gaussian unitaries.
RMatrix expm(const RMatrix& a);
CMatrix expm(const CMatrix& a);

/// Eigenvalues of a Hermitian matrix in ascending order.
RVector hermitian_eigenvalues(const CMatrix& h);

/// max_ij |U^dagger U - I|_ij over the given columns (all columns when empty).
double unitarity_defect(const CMatrix& u);

}  // namespace linalg
}  // namespace qng
