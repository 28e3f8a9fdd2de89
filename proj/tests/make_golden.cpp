// Writes fixtures/golden_measures.csv: measure values refined until stable
// (grid doubled and tolerances tightened until every value moves < 1e-9).
//
//   make_golden <fixtures-dir>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qng/measures.hpp"
#include "qng/report_io.hpp"
#include "qng/states.hpp"

using namespace qng;

namespace {

const std::vector<std::string> kStates{"fock:1",      "fock:2",      "pacs:1",      "pacs:2",     "evencat:0.8",
                                       "evencat:1.2", "oddcat:1.2",  "oddcat:1.6",  "noisy1:0.4", "noisy1:0.9",
                                       "randpure:5:seed=1", "randmixed:5:seed=2", "pnes:0.3", "pnes:0.7",
                                       "pstmsv:0.5:0"};

std::vector<double> values(const FockState& s, const OptimizerOptions& o) {
  const NklResult nkl = n_kl(s, o);
  const KurtosisEstimate k = kurtosis_strategy(s, o);
  return {nkl.value, k.estimate, n_qr(s), s.modes() == 1 ? *n_hs(s, nkl.value).exact : std::nan("")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "tests/fixtures";
  std::ofstream out(dir + "/golden_measures.csv");
  out << "state,nkl,kurtosis_estimate,nqr,nhs_exact\n";
  for (const auto& text : kStates) {
    const FockState s = build(parse_state_spec(text));
    OptimizerOptions o;
    o.grid_points = 4096;
    o.phase_tolerance = 1e-9;
    o.simplex_tolerance = 1e-7;
    std::vector<double> v = values(s, o);
    for (int round = 0; round < 4; ++round) {
      o.grid_points *= 2;
      o.phase_tolerance /= 10;
      o.simplex_tolerance /= 10;
      const std::vector<double> next = values(s, o);
      double change = 0;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (std::isfinite(v[i])) change = std::max(change, std::abs(next[i] - v[i]));
      v = next;
      std::fprintf(stderr, "%s grid %d change %.3g\n", text.c_str(), o.grid_points, change);
      if (change < 1e-9) break;
    }
    out << text;
    for (double x : v) out << ',' << format_number(x);
    out << '\n';
  }
  return 0;
}
