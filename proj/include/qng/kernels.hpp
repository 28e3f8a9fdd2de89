#pragma once

// Hot loops of the quadrature engine and the entropy integrals. Each kernel has
// a serial reference and an OpenMP version that must agree bit for bit on the
// reductions (fixed chunking) and to round-off on the element-wise maps.

#include <cstddef>

#include "qng/linalg.hpp"

namespace qng::kernels {

/// Reductions are summed over fixed chunks of this many elements and the
/// chunk partials are added in order, independent of the thread count.
inline constexpr std::size_t kChunk = 1024;

namespace serial {

/// out[i] = sum_k cos(k phi) re[k][i] - sin(k phi) im[k][i], k = 0..harmonics-1.
/// re and im are harmonics x nodes row-major.
void synthesize_density(const double* re, const double* im, int harmonics, std::size_t nodes, double phi, double* out);

/// out[i] = sum_{m,n} Re(rho_mn) psi_m(x_i) psi_n(x_i) for Hermitian rho and a
/// real table psi (dim x nodes, row-major).
void quadratic_form_density(const CMatrix& rho, const double* psi, std::size_t nodes, double* out);

/// -sum_i w_i p_i ln p_i over entries with p_i > 1e-300.
double entropy_sum(const double* p, const double* w, std::size_t n);

/// sum_i w_i p_i ln(p_i / q_i) over entries with p_i > 1e-300. Returns +inf
/// when some q_i <= 0 where p_i > 0.
double relative_entropy_sum(const double* p, const double* q, const double* w, std::size_t n);

}  // namespace serial

namespace omp {

/// Threads the parallel kernels will use (omp_get_max_threads).
int max_threads();

void synthesize_density(const double* re, const double* im, int harmonics, std::size_t nodes, double phi, double* out);
void quadratic_form_density(const CMatrix& rho, const double* psi, std::size_t nodes, double* out);
double entropy_sum(const double* p, const double* w, std::size_t n);
double relative_entropy_sum(const double* p, const double* q, const double* w, std::size_t n);

}  // namespace omp

}  // namespace qng::kernels
