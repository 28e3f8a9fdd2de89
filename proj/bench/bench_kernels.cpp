// Serial reference kernels against their OpenMP versions, plus one full
// two-mode N_KL evaluation.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "qng/info_theory.hpp"
#include "qng/kernels.hpp"
#include "qng/quadrature.hpp"
#include "qng/rng.hpp"
#include "qng/states.hpp"

namespace {

using namespace qng;

struct Tables {
  std::vector<double> re, im, psi, p, w;
  CMatrix rho;
  std::size_t nodes;
  int dim;
};

Tables make_tables(std::size_t nodes, int dim) {
  Tables t;
  t.nodes = nodes;
  t.dim = dim;
  Rng rng(7);
  t.re.resize(static_cast<std::size_t>(dim) * nodes);
  t.im.resize(t.re.size());
  for (auto& v : t.re) v = rng.normal();
  for (auto& v : t.im) v = rng.normal();
  std::vector<double> xs(nodes);
  for (std::size_t i = 0; i < nodes; ++i) xs[i] = -12.0 + 24.0 * static_cast<double>(i) / static_cast<double>(nodes - 1);
  t.psi = oscillator_table(xs, dim);
  CMatrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = cplx(rng.normal(), rng.normal());
  t.rho = a * a.adjoint();
  t.rho /= t.rho.trace();
  t.p.resize(nodes);
  t.w.assign(nodes, 24.0 / static_cast<double>(nodes - 1));
  for (std::size_t i = 0; i < nodes; ++i) t.p[i] = std::exp(-xs[i] * xs[i]) / std::sqrt(M_PI);
  return t;
}

template <bool Parallel>
void BM_Synthesize(benchmark::State& state) {
  const auto t = make_tables(static_cast<std::size_t>(state.range(0)), 32);
  std::vector<double> out(t.nodes);
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::omp::synthesize_density(t.re.data(), t.im.data(), t.dim, t.nodes, 0.3, out.data());
    else
      kernels::serial::synthesize_density(t.re.data(), t.im.data(), t.dim, t.nodes, 0.3, out.data());
    benchmark::DoNotOptimize(out.data());
  }
  state.counters["threads"] = Parallel ? kernels::omp::max_threads() : 1;
}

template <bool Parallel>
void BM_QuadraticForm(benchmark::State& state) {
  const auto t = make_tables(4097, static_cast<int>(state.range(0)));
  std::vector<double> out(t.nodes);
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::omp::quadratic_form_density(t.rho, t.psi.data(), t.nodes, out.data());
    else
      kernels::serial::quadratic_form_density(t.rho, t.psi.data(), t.nodes, out.data());
    benchmark::DoNotOptimize(out.data());
  }
  state.counters["threads"] = Parallel ? kernels::omp::max_threads() : 1;
}

template <bool Parallel>
void BM_Entropy(benchmark::State& state) {
  const auto t = make_tables(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    double v = Parallel ? kernels::omp::entropy_sum(t.p.data(), t.w.data(), t.nodes)
                        : kernels::serial::entropy_sum(t.p.data(), t.w.data(), t.nodes);
    benchmark::DoNotOptimize(v);
  }
  state.counters["threads"] = Parallel ? kernels::omp::max_threads() : 1;
}

void BM_TwoModeNegentropy(benchmark::State& state) {
  const FockState s = build(StateSpec::photon_subtracted_tmsv(0.5, 0.0), 24);
  const QuadratureEngine engine(s, state_grid(s));
  for (auto _ : state) {
    double v = negentropy_raw(engine.distribution(QuadratureDirection::two_mode(0.4, 0.2, 1.1)));
    benchmark::DoNotOptimize(v);
  }
}

}  // namespace

BENCHMARK(BM_Synthesize<false>)->Arg(4097)->Arg(65537);
BENCHMARK(BM_Synthesize<true>)->Arg(4097)->Arg(65537);
BENCHMARK(BM_QuadraticForm<false>)->Arg(11)->Arg(47);
BENCHMARK(BM_QuadraticForm<true>)->Arg(11)->Arg(47);
BENCHMARK(BM_Entropy<false>)->Arg(4097)->Arg(1 << 20);
BENCHMARK(BM_Entropy<true>)->Arg(4097)->Arg(1 << 20);
BENCHMARK(BM_TwoModeNegentropy)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
