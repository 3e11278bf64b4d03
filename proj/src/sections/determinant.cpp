#include "torsionlab/sections/determinant.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "torsionlab/errors.hpp"

namespace torsionlab::sections {

cplx determinant(const Matrix& A) {
  if (A.size() == 0) return 1.0;
  return A.partialPivLu().determinant();
}

CornerTrace corner_trace(const OperatorWord& w, int N, int M, double tol, std::optional<int> pad) {
  if (M <= N) throw std::invalid_argument("corner trace needs M > N");
  const OperatorSection sec = compose_padded(w, M, pad);
  CornerTrace out;
  out.dim = N;
  out.eval_dim = M;
  cplx tail = 0.0;
  for (int j = 0; j < M; ++j) (j < N ? out.value : tail) += sec.entries(j, j);
  out.tail = std::abs(tail);
  out.converged = out.tail <= tol;
  return out;
}

FredholmDet run_det_schedule(const std::function<cplx(int)>& det_at, const DetSchedule& schedule) {
  FredholmDet out;
  std::vector<double> steps;
  for (int N : schedule.dims) {
    const cplx d = det_at(N);
    out.dims.push_back(N);
    out.history.push_back(d);
    out.value = d;
    if (out.history.size() < 2) continue;
    const double step = std::abs(d - out.history[out.history.size() - 2]);
    const double rel = step / std::max(std::abs(d), 1e-300);
    steps.push_back(step);
    out.err_estimate = step;
    out.converged = rel < schedule.rel_tol;
    if (rel < schedule.early_stop) break;
  }
  if (out.history.size() < 2) out.err_estimate = std::numeric_limits<double>::infinity();
  const auto n = steps.size();
  if (!out.converged && n >= 2 && steps[n - 1] > steps[n - 2] && (n < 3 || steps[n - 2] > steps[n - 3])) {
    std::ostringstream os;
    os << "determinant schedule diverges; history:";
    for (std::size_t k = 0; k < out.history.size(); ++k)
      os << " N=" << out.dims[k] << ":" << out.history[k];
    throw NumericalError(os.str());
  }
  return out;
}

FredholmDet fredholm_det(const OperatorWord& w, const DetSchedule& schedule) {
  return run_det_schedule([&](int N) { return determinant(compose_padded(w, N, schedule.pad).entries); },
                          schedule);
}

}  // namespace torsionlab::sections
