#include "qng/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qng::optimize {

ScalarResult golden_section_max(const std::function<double(double)>& f, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  ScalarResult r;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  r.evaluations = 2;
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++r.evaluations;
  }
  if (fc >= fd) {
    r.x = c;
    r.value = fc;
  } else {
    r.x = d;
    r.value = fd;
  }
  return r;
}

SimplexResult nelder_mead_max(const std::function<double(const std::vector<double>&)>& f, std::vector<double> start,
                              const std::vector<double>& step, double tol, int max_iterations) {
  const std::size_t n = start.size();
  std::vector<std::vector<double>> pts(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step[i];
  std::vector<double> vals(n + 1);
  SimplexResult r;
  for (std::size_t i = 0; i <= n; ++i) vals[i] = f(pts[i]);
  r.evaluations = static_cast<int>(n + 1);

  std::vector<std::size_t> order(n + 1);
  auto point = [&](const std::vector<double>& centroid, const std::vector<double>& worst, double t) {
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = centroid[i] + t * (worst[i] - centroid[i]);
    return p;
  };

  for (r.iterations = 0; r.iterations < max_iterations; ++r.iterations) {
    std::iota(order.begin(), order.end(), 0);
    // best first; ties resolved by index to stay deterministic
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
    double diameter = 0.0;
    for (std::size_t k = 1; k <= n; ++k)
      for (std::size_t i = 0; i < n; ++i) diameter = std::max(diameter, std::abs(pts[order[k]][i] - pts[order[0]][i]));
    if (diameter < tol) {
      r.converged = true;
      break;
    }
    std::vector<double> centroid(n, 0.0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) centroid[i] += pts[order[k]][i] / static_cast<double>(n);
    const std::size_t worst = order[n];
    const std::size_t second = order[n - 1];
    const std::size_t best = order[0];

    const auto reflected = point(centroid, pts[worst], -1.0);
    const double fr = f(reflected);
    ++r.evaluations;
    if (fr > vals[best]) {
      const auto expanded = point(centroid, pts[worst], -2.0);
      const double fe = f(expanded);
      ++r.evaluations;
      if (fe > fr) {
        pts[worst] = expanded;
        vals[worst] = fe;
      } else {
        pts[worst] = reflected;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr > vals[second]) {
      pts[worst] = reflected;
      vals[worst] = fr;
      continue;
    }
    const bool outside = fr > vals[worst];
    const auto contracted = point(centroid, pts[worst], outside ? -0.5 : 0.5);
    const double fk = f(contracted);
    ++r.evaluations;
    if (fk > (outside ? fr : vals[worst])) {
      pts[worst] = contracted;
      vals[worst] = fk;
      continue;
    }
    for (std::size_t k = 1; k <= n; ++k) {
      auto& p = pts[order[k]];
      for (std::size_t i = 0; i < n; ++i) p[i] = pts[best][i] + 0.5 * (p[i] - pts[best][i]);
      vals[order[k]] = f(p);
      ++r.evaluations;
    }
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k <= n; ++k)
    if (vals[k] > vals[best]) best = k;
  r.x = pts[best];
  r.value = vals[best];
  return r;
}

}  // namespace qng::optimize
