#include "torsionlab/funcalc/perturbation.hpp"

#include <algorithm>
#include <cmath>

#include "torsionlab/errors.hpp"
#include "torsionlab/sections/matrix_function.hpp"
#include "torsionlab/sections/schatten.hpp"
#include "torsionlab/sections/toeplitz.hpp"

namespace torsionlab::funcalc {

using sections::FunctionKind;
using sections::MatrixFunctionMode;

BoundReport perturbation_schatten(const symbols::FourierSymbol& a, const Matrix& k, const sections::FunctionSpec& f,
                                  double p, const std::vector<int>& schedule) {
  if (schedule.empty()) throw std::invalid_argument("empty schedule");
  BoundReport r;
  r.dims = schedule;
  for (int N : schedule) {
    if (N < k.rows() || N < k.cols()) throw std::invalid_argument("section smaller than the perturbation");
    const Matrix A = sections::toeplitz_matrix(a, N);
    Matrix B = A;
    B.topLeftCorner(k.rows(), k.cols()) += k;
    const bool hermitian = A.isApprox(A.adjoint(), 1e-12) && B.isApprox(B.adjoint(), 1e-12);
    MatrixFunctionMode mode;
    switch (f.kind()) {
      case FunctionKind::smooth_real:
        if (!hermitian) throw DomainError("smooth real function needs hermitian sections");
        mode = MatrixFunctionMode::hermitian_eig;
        break;
      case FunctionKind::holomorphic_contour:
        mode = MatrixFunctionMode::contour;
        break;
      default:
        mode = (hermitian && !f.is_polynomial()) ? MatrixFunctionMode::hermitian_eig : MatrixFunctionMode::power_series;
    }
    const Matrix D = sections::matrix_function(B, f, mode) - sections::matrix_function(A, f, mode);
    r.history.push_back(sections::schatten_norm(D, p));
  }
  const auto n = r.history.size();
  r.measured = r.history.back();
  double rel = 0.0;
  if (n >= 2) {
    const double hi = std::max(r.history[n - 1], r.history[n - 2]);
    const double lo = std::min(r.history[n - 1], r.history[n - 2]);
    rel = hi > 0 ? (hi - lo) / hi : 0.0;
  }
  const bool plateau = n >= 2 && rel <= 0.01;
  r.bound = r.measured;
  r.constants["plateau"] = plateau ? 1.0 : 0.0;
  r.constants["relative_change"] = rel;
  r.constants["p"] = p;
  r.finalize();
  r.pass = plateau;
  return r;
}

}  // namespace torsionlab::funcalc
