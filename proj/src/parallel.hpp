#pragma once

// Index-parallel loop. Results are written by index, so reductions done
// afterwards are independent of the schedule. The first exception (lowest
// index) is rethrown on the calling thread.

#include <exception>
#include <vector>

namespace qng::detail {

template <typename F>
void parallel_for(int n, F&& f) {
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n > 0 ? n : 0));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    try {
      f(i);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace qng::detail
