#pragma once

// Derivative-free maximizers used by the measure optimizers.

#include <functional>
#include <vector>

namespace qng::optimize {

struct ScalarResult {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

/// Golden-section search for a maximum of f on [a, b], stopping when the
/// bracket is shorter than `tol`.
ScalarResult golden_section_max(const std::function<double(double)>& f, double a, double b, double tol);

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

/// Nelder-Mead maximization from `start` with initial edge lengths `step`.
/// Converged when the simplex diameter (max-norm) falls below `tol`.
SimplexResult nelder_mead_max(const std::function<double(const std::vector<double>&)>& f, std::vector<double> start,
                              const std::vector<double>& step, double tol, int max_iterations = 2000);

}  // namespace qng::optimize
