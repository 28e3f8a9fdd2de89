#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "qng/kernels.hpp"

namespace qng::kernels::serial {

void synthesize_density(const double* re, const double* im, int harmonics, std::size_t nodes, double phi, double* out) {
  for (std::size_t i = 0; i < nodes; ++i) out[i] = 0.0;
  for (int k = 0; k < harmonics; ++k) {
    const double c = std::cos(k * phi), s = std::sin(k * phi);
    const double* r = re + static_cast<std::size_t>(k) * nodes;
    const double* m = im + static_cast<std::size_t>(k) * nodes;
    for (std::size_t i = 0; i < nodes; ++i) out[i] += c * r[i] - s * m[i];
  }
}

void quadratic_form_density(const CMatrix& rho, const double* psi, std::size_t nodes, double* out) {
  const Eigen::Index dim = rho.rows();
  for (std::size_t i = 0; i < nodes; ++i) {
    double acc = 0.0;
    for (Eigen::Index m = 0; m < dim; ++m) {
      const double pm = psi[static_cast<std::size_t>(m) * nodes + i];
      double row = 0.0;
      for (Eigen::Index n = 0; n < dim; ++n) row += rho(m, n).real() * psi[static_cast<std::size_t>(n) * nodes + i];
      acc += pm * row;
    }
    out[i] = acc;
  }
}

double entropy_sum(const double* p, const double* w, std::size_t n) {
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<double> partial(chunks, 0.0);
  for (std::size_t c = 0; c < chunks; ++c) {
    double acc = 0.0;
    const std::size_t end = std::min(n, (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i)
      if (p[i] > 1e-300) acc -= w[i] * p[i] * std::log(p[i]);
    partial[c] = acc;
  }
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

double relative_entropy_sum(const double* p, const double* q, const double* w, std::size_t n) {
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<double> partial(chunks, 0.0);
  bool infinite = false;
  for (std::size_t c = 0; c < chunks; ++c) {
    double acc = 0.0;
    const std::size_t end = std::min(n, (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i) {
      if (!(p[i] > 1e-300)) continue;
      if (!(q[i] > 0.0)) {
        infinite = true;
        continue;
      }
      acc += w[i] * p[i] * std::log(p[i] / q[i]);
    }
    partial[c] = acc;
  }
  if (infinite) return std::numeric_limits<double>::infinity();
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

}  // namespace qng::kernels::serial
