#include "qng/linalg.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace qng::linalg {
namespace {

template <typename Mat>
Mat expm_impl(const Mat& a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return a;
  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.25) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
  const Mat scaled = a / std::ldexp(1.0, squarings);

  Mat result = Mat::Identity(n, n);
  Mat term = Mat::Identity(n, n);
  for (int k = 1; k <= 30; ++k) {
    term = (term * scaled) / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int i = 0; i < squarings; ++i) result = (result * result).eval();
  return result;
}

}  // namespace

RMatrix expm(const RMatrix& a) { return expm_impl(a); }
CMatrix expm(const CMatrix& a) { return expm_impl(a); }

RVector hermitian_eigenvalues(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double unitarity_defect(const CMatrix& u) {
  const CMatrix g = u.adjoint() * u - CMatrix::Identity(u.cols(), u.cols());
  return g.cwiseAbs().maxCoeff();
}

}  // namespace qng::linalg
