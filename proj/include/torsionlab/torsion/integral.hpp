#pragma once

#include "torsionlab/symbols/fourier_symbol.hpp"
#include "torsionlab/torsion/result.hpp"

namespace torsionlab::torsion {

struct IntegralOptions {
  double basepoint = 0.0;  // theta0: integrals run counterclockwise from e^{i theta0}
  int min_grid = 0;
  int max_grid = 1 << 20;
  double rel_tol = 1e-12;  // grid doubling stops below this relative change
};

// exp((1/2 pi i)(int log f dlog g - log g(p) int dlog f)) with continuous logs
// started at p = e^{i theta0}. Trapezoid quadrature on uniform grids; the
// linear part of each log is integrated in closed form so the remaining
// integrands are periodic. err_estimate is the change under grid doubling.
TorsionResult torsion_integral(const symbols::FourierSymbol& f, const symbols::FourierSymbol& g,
                               const IntegralOptions& opts = {});

}  // namespace torsionlab::torsion
