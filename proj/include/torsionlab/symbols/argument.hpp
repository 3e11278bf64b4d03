#pragma once

#include <functional>
#include <vector>

#include "torsionlab/symbols/fourier_symbol.hpp"
#include "torsionlab/symbols/rational_symbol.hpp"
#include "torsionlab/types.hpp"

namespace torsionlab::symbols {

// Continuous logarithm of a nonvanishing circle function sampled at
// theta_j = theta0 + 2 pi j / L, j = 0..L (the last point closes the loop).
// log_values[0] uses the principal branch.
struct ContinuousLog {
  double theta0 = 0.0;
  std::vector<cplx> log_values;  // L + 1 entries
  int winding = 0;
};

// Samples must have L + 1 entries with samples[L] the value at theta0 + 2 pi.
// Throws DomainError if any |sample| is below vanish_tol * max |sample|,
// ResolutionError if an adjacent argument jump exceeds pi/2 or the total
// increment is farther than 0.1 from an integer multiple of 2 pi.
ContinuousLog continuous_log(const std::vector<cplx>& samples, double theta0,
                             double vanish_tol = 1e-10);

// Grid size max(1024, 64 K) rounded up to a power of two.
int winding_grid(int bandwidth);

int winding_number(const FourierSymbol& s);
int winding_number(const RationalSymbol& r);
// Winding of an arbitrary callable theta -> value on the given grid.
int winding_number(const std::function<cplx(double)>& fn, int grid);

// Minus the winding number: the Fredholm index of T_s.
int numerical_index(const FourierSymbol& s);
int numerical_index(const RationalSymbol& r);

}  // namespace torsionlab::symbols
