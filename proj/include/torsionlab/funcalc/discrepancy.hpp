#pragma once

#include <utility>
#include <vector>

#include "torsionlab/funcalc/bound_report.hpp"
#include "torsionlab/sections/function_spec.hpp"
#include "torsionlab/symbols/fourier_symbol.hpp"

namespace torsionlab::funcalc {

// The symbol f o phi. Exact for polynomial f, adaptive sampling otherwise.
symbols::FourierSymbol compose(const sections::FunctionSpec& f, const symbols::FourierSymbol& phi);

// ||[phi, P]||_q from the Hankel blocks at dimension max(N, bandwidth).
double commutator_schatten(const symbols::FourierSymbol& phi, double q, int N = 0);

struct DiscrepancyReports {
  BoundReport two_p;  // L^{2p}
  BoundReport p;      // L^p
};

// ||T_{f o phi} - f(T_phi)|| in L^{2p} and L^p on padded corners along the
// schedule, against
//   L^{2p}: ||[phi,P]||_{2p} * ||phi|| / 2 * ftilde''(||phi||)
//   L^p:    ||[phi,P]||_{2p}^2 / 2 * ftilde''(||phi||)
// with ||phi|| the sup norm of the symbol. The 2p constants also carry the
// variant that divides by ||phi|| under "bound_2p_divided".
DiscrepancyReports calculus_discrepancy(const symbols::FourierSymbol& phi, const sections::FunctionSpec& f,
                                        double p, const std::vector<int>& schedule = {16, 32, 64, 128});

// ||e^{i t T_phi} - T_{e^{i t phi}}||_p against (|t|+1)^2 (c1 + c2), where
// c1 = max_s ||e^{i s T_phi} - T_{e^{i s phi}}||_p and c2 = max_s
// ||[P, e^{i s phi}]||_{2p}^2 over s in [0, 1]. The maxima are taken on a
// uniform grid, refined once around the argmax.
BoundReport exp_unitary_estimate(const symbols::FourierSymbol& phi, double t, double p, int grid = 17,
                                 const std::vector<int>& schedule = {32, 64});

}  // namespace torsionlab::funcalc
