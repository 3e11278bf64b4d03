#pragma once

#include <map>
#include <string>
#include <vector>

namespace torsionlab::funcalc {

struct BoundReport {
  double measured = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // bound - measured
  std::map<std::string, double> constants;
  std::vector<int> dims;
  std::vector<double> history;  // measured at each dim
  bool pass = false;

  static double tol_slack(double bound) { return 1e-9 + 1e-6 * bound; }

  // Recomputes margin and pass from measured and bound.
  void finalize() {
    margin = bound - measured;
    pass = margin >= -tol_slack(bound);
  }
};

}  // namespace torsionlab::funcalc
