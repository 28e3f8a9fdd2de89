#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "qng/kernels.hpp"
#include "qng/quadrature.hpp"
#include "qng/rng.hpp"

using namespace qng;

namespace {

std::vector<double> noise(std::size_t n, std::uint64_t seed, bool positive = false) {
  Rng rng(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = positive ? rng.uniform() + 1e-3 : rng.normal();
  return v;
}

}  // namespace

TEST(Kernels, SynthesizeDensityAgrees) {
  for (std::size_t nodes : {17u, 1025u, 40961u}) {
    const int h = 9;
    const auto re = noise(h * nodes, 1), im = noise(h * nodes, 2);
    std::vector<double> a(nodes), b(nodes);
    kernels::serial::synthesize_density(re.data(), im.data(), h, nodes, 0.77, a.data());
    kernels::omp::synthesize_density(re.data(), im.data(), h, nodes, 0.77, b.data());
    for (std::size_t i = 0; i < nodes; ++i) EXPECT_NEAR(a[i], b[i], 1e-13);
  }
}

TEST(Kernels, QuadraticFormAgrees) {
  const std::size_t nodes = 2049;
  std::vector<double> xs(nodes);
  for (std::size_t i = 0; i < nodes; ++i) xs[i] = -10.0 + 20.0 * i / (nodes - 1);
  for (int dim : {1, 6, 23}) {
    const auto psi = oscillator_table(xs, dim);
    Rng rng(dim);
    CMatrix a(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) a(i, j) = cplx(rng.normal(), rng.normal());
    const CMatrix rho = a * a.adjoint();
    std::vector<double> s(nodes), o(nodes);
    kernels::serial::quadratic_form_density(rho, psi.data(), nodes, s.data());
    kernels::omp::quadratic_form_density(rho, psi.data(), nodes, o.data());
    for (std::size_t i = 0; i < nodes; ++i) EXPECT_NEAR(s[i], o[i], 1e-12 * (1 + std::abs(s[i])));
  }
}

TEST(Kernels, ReductionsAreBitIdentical) {
  for (std::size_t n : {1u, 1023u, 1024u, 1025u, 100000u}) {
    const auto p = noise(n, 3, true), q = noise(n, 4, true), w = noise(n, 5, true);
    EXPECT_EQ(kernels::serial::entropy_sum(p.data(), w.data(), n), kernels::omp::entropy_sum(p.data(), w.data(), n));
    EXPECT_EQ(kernels::serial::relative_entropy_sum(p.data(), q.data(), w.data(), n),
              kernels::omp::relative_entropy_sum(p.data(), q.data(), w.data(), n));
  }
}

TEST(Kernels, RelativeEntropyInfiniteOffSupport) {
  std::vector<double> p{0.5, 0.5}, q{1.0, 0.0}, w{1.0, 1.0};
  EXPECT_TRUE(std::isinf(kernels::serial::relative_entropy_sum(p.data(), q.data(), w.data(), 2)));
  EXPECT_TRUE(std::isinf(kernels::omp::relative_entropy_sum(p.data(), q.data(), w.data(), 2)));
}
