#include "ladder.hpp"

#include <cmath>

#include "qng/error.hpp"

namespace qng::detail {

SparseC ladder(int modes, int dim, int mode, bool dagger) {
  if (modes != 1 && modes != 2) throw ShapeError("only one- and two-mode operators are supported");
  const Eigen::Index total = modes == 1 ? dim : static_cast<Eigen::Index>(dim) * dim;
  std::vector<Eigen::Triplet<cplx>> entries;
  entries.reserve(static_cast<std::size_t>(total));
  for (Eigen::Index i = 0; i < total; ++i) {
    const int n1 = modes == 1 ? static_cast<int>(i) : static_cast<int>(i / dim);
    const int n2 = modes == 1 ? 0 : static_cast<int>(i % dim);
    const int n = mode == 0 ? n1 : n2;
    // a|n> = sqrt(n)|n-1>, a^dag|n> = sqrt(n+1)|n+1>
    const int target = dagger ? n + 1 : n - 1;
    if (target < 0 || target >= dim) continue;
    const double amp = std::sqrt(static_cast<double>(dagger ? n + 1 : n));
    const int t1 = mode == 0 ? target : n1;
    const int t2 = mode == 0 ? n2 : target;
    const Eigen::Index row = modes == 1 ? t1 : static_cast<Eigen::Index>(two_mode_index(t1, t2, dim));
    entries.emplace_back(row, i, amp);
  }
  SparseC out(total, total);
  out.setFromTriplets(entries.begin(), entries.end());
  return out;
}

SparseC quadrature_operator(int modes, int dim, const std::vector<double>& coeffs, const std::vector<double>& phis) {
  const Eigen::Index total = modes == 1 ? dim : static_cast<Eigen::Index>(dim) * dim;
  SparseC q(total, total);
  for (int j = 0; j < modes; ++j) {
    const cplx e = std::polar(coeffs[static_cast<std::size_t>(j)] / std::sqrt(2.0), phis[static_cast<std::size_t>(j)]);
    q += e * ladder(modes, dim, j, false) + std::conj(e) * ladder(modes, dim, j, true);
  }
  return q;
}

namespace {

Eigen::Index remap(Eigen::Index i, int modes, int from, int to) {
  if (modes == 1) return i;
  return static_cast<Eigen::Index>(two_mode_index(static_cast<int>(i / from), static_cast<int>(i % from), to));
}

}  // namespace

CVector embed(const CVector& v, int modes, int from, int to) {
  const Eigen::Index total = modes == 1 ? to : static_cast<Eigen::Index>(to) * to;
  CVector out = CVector::Zero(total);
  for (Eigen::Index i = 0; i < v.size(); ++i) out(remap(i, modes, from, to)) = v(i);
  return out;
}

CMatrix embed(const CMatrix& rho, int modes, int from, int to) {
  const Eigen::Index total = modes == 1 ? to : static_cast<Eigen::Index>(to) * to;
  CMatrix out = CMatrix::Zero(total, total);
  for (Eigen::Index j = 0; j < rho.cols(); ++j) {
    const Eigen::Index cj = remap(j, modes, from, to);
    for (Eigen::Index i = 0; i < rho.rows(); ++i) out(remap(i, modes, from, to), cj) = rho(i, j);
  }
  return out;
}

cplx expectation(const CMatrix& rho, const SparseC& a) {
  // tr(rho A) = sum_{ij} rho_ji A_ij
  cplx acc = 0.0;
  for (Eigen::Index k = 0; k < a.outerSize(); ++k)
    for (SparseC::InnerIterator it(a, k); it; ++it) acc += rho(it.col(), it.row()) * it.value();
  return acc;
}

cplx expectation(const CVector& v, const SparseC& a) { return v.dot(a * v); }

}  // namespace qng::detail
