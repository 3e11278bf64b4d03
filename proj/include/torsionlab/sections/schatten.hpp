#pragma once

#include <vector>

#include "torsionlab/sections/operator_section.hpp"

namespace torsionlab::sections {

struct SchattenEstimate {
  double p = 1.0;
  double value = 0.0;
  int dim = 0;
  bool converged = false;
  std::vector<double> history;  // values at earlier dims, oldest first
};

Eigen::VectorXd singular_values(const Matrix& A);
double schatten_norm(const Matrix& A, double p);

// converged compares against history.back() (relative 1e-8); an empty history
// leaves converged false.
SchattenEstimate schatten_norm(const OperatorSection& sec, double p,
                               std::vector<double> history = {}, double rel_tol = 1e-8);

}  // namespace torsionlab::sections
