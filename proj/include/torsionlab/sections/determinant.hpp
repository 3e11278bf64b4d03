#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "torsionlab/sections/word.hpp"

namespace torsionlab::sections {

struct CornerTrace {
  cplx value = 0.0;
  double tail = 0.0;  // |sum of the diagonal over [N, M)|
  bool converged = false;
  int dim = 0;       // N
  int eval_dim = 0;  // M
};

// Trace over the leading N diagonal entries of the M x M padded composition.
// The tail over [N, M) is the convergence witness.
CornerTrace corner_trace(const OperatorWord& w, int N, int M, double tol = 1e-10,
                         std::optional<int> pad = std::nullopt);

struct DetSchedule {
  std::vector<int> dims{32, 64, 128, 256};
  double rel_tol = 1e-8;     // convergence declared below this relative step
  double early_stop = 1e-12;  // stop the sweep below this relative step
  std::optional<int> pad;
};

struct FredholmDet {
  cplx value = 1.0;
  double err_estimate = 0.0;  // |last - previous|
  std::vector<int> dims;
  std::vector<cplx> history;
  bool converged = false;
};

// Runs det_at over the schedule. Throws NumericalError with the history when
// the steps grow over the last three dims without meeting rel_tol.
FredholmDet run_det_schedule(const std::function<cplx(int)>& det_at, const DetSchedule& schedule);

FredholmDet fredholm_det(const OperatorWord& w, const DetSchedule& schedule = {});

cplx determinant(const Matrix& A);

}  // namespace torsionlab::sections
