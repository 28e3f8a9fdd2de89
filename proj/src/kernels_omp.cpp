#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "qng/kernels.hpp"

namespace qng::kernels::omp {

int max_threads() { return omp_get_max_threads(); }

void synthesize_density(const double* re, const double* im, int harmonics, std::size_t nodes, double phi, double* out) {
  std::vector<double> c(static_cast<std::size_t>(harmonics)), s(static_cast<std::size_t>(harmonics));
  for (int k = 0; k < harmonics; ++k) {
    c[static_cast<std::size_t>(k)] = std::cos(k * phi);
    s[static_cast<std::size_t>(k)] = std::sin(k * phi);
  }
  const auto n = static_cast<std::ptrdiff_t>(nodes);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int k = 0; k < harmonics; ++k) {
      const std::size_t at = static_cast<std::size_t>(k) * nodes + static_cast<std::size_t>(i);
      acc += c[static_cast<std::size_t>(k)] * re[at] - s[static_cast<std::size_t>(k)] * im[at];
    }
    out[i] = acc;
  }
}

void quadratic_form_density(const CMatrix& rho, const double* psi, std::size_t nodes, double* out) {
  const Eigen::Index dim = rho.rows();
  const RMatrix re = rho.real();
  using Table = Eigen::Map<const RMatrix, 0, Eigen::OuterStride<>>;
  const auto blocks = static_cast<std::ptrdiff_t>((nodes + kChunk - 1) / kChunk);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < blocks; ++b) {
    const std::size_t start = static_cast<std::size_t>(b) * kChunk;
    const auto width = static_cast<Eigen::Index>(std::min(kChunk, nodes - start));
    // Row-major psi is column-major psi^T: a (width x dim) view with outer stride `nodes`.
    const Table t(psi + start, width, dim, Eigen::OuterStride<>(static_cast<Eigen::Index>(nodes)));
    const RMatrix tr = t * re;
    for (Eigen::Index i = 0; i < width; ++i) out[start + static_cast<std::size_t>(i)] = tr.row(i).dot(t.row(i));
  }
}

double entropy_sum(const double* p, const double* w, std::size_t n) {
  const auto chunks = static_cast<std::ptrdiff_t>((n + kChunk - 1) / kChunk);
  std::vector<double> partial(static_cast<std::size_t>(chunks), 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < chunks; ++c) {
    double acc = 0.0;
    const std::size_t end = std::min(n, static_cast<std::size_t>(c + 1) * kChunk);
    for (std::size_t i = static_cast<std::size_t>(c) * kChunk; i < end; ++i)
      if (p[i] > 1e-300) acc -= w[i] * p[i] * std::log(p[i]);
    partial[static_cast<std::size_t>(c)] = acc;
  }
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

double relative_entropy_sum(const double* p, const double* q, const double* w, std::size_t n) {
  const auto chunks = static_cast<std::ptrdiff_t>((n + kChunk - 1) / kChunk);
  std::vector<double> partial(static_cast<std::size_t>(chunks), 0.0);
  int infinite = 0;
#pragma omp parallel for schedule(static) reduction(| : infinite)
  for (std::ptrdiff_t c = 0; c < chunks; ++c) {
    double acc = 0.0;
    const std::size_t end = std::min(n, static_cast<std::size_t>(c + 1) * kChunk);
    for (std::size_t i = static_cast<std::size_t>(c) * kChunk; i < end; ++i) {
      if (!(p[i] > 1e-300)) continue;
      if (!(q[i] > 0.0)) {
        infinite = 1;
        continue;
      }
      acc += w[i] * p[i] * std::log(p[i] / q[i]);
    }
    partial[static_cast<std::size_t>(c)] = acc;
  }
  if (infinite) return std::numeric_limits<double>::infinity();
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

}  // namespace qng::kernels::omp
