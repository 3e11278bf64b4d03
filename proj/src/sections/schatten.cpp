#include "torsionlab/sections/schatten.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

namespace torsionlab::sections {

Eigen::VectorXd singular_values(const Matrix& A) {
  if (A.size() == 0) return {};
  Eigen::BDCSVD<Matrix> svd(A);
  return svd.singularValues();
}

double schatten_norm(const Matrix& A, double p) {
  if (p < 1.0) throw std::invalid_argument("Schatten exponent must be at least 1");
  const Eigen::VectorXd s = singular_values(A);
  if (s.size() == 0) return 0.0;
  const double top = s.maxCoeff();
  if (top == 0.0) return 0.0;
  // Scaled to avoid overflow for large p.
  double sum = 0.0;
  for (Eigen::Index k = 0; k < s.size(); ++k) sum += std::pow(s(k) / top, p);
  return top * std::pow(sum, 1.0 / p);
}

SchattenEstimate schatten_norm(const OperatorSection& sec, double p, std::vector<double> history,
                               double rel_tol) {
  SchattenEstimate est;
  est.p = p;
  est.dim = sec.dim();
  est.value = schatten_norm(sec.entries, p);
  if (!history.empty()) {
    est.converged = std::abs(est.value - history.back()) <= rel_tol * std::max(1.0, est.value);
  }
  est.history = std::move(history);
  return est;
}

}  // namespace torsionlab::sections
