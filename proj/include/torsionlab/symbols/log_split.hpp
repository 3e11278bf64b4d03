#pragma once

#include "torsionlab/symbols/fourier_symbol.hpp"
#include "torsionlab/types.hpp"

namespace torsionlab::symbols {

// s = z^n exp(minus) exp(plus) with n the winding number of s,
// plus = P log_branch, minus = (I - P) log_branch.
struct LogSplit {
  int winding = 0;
  FourierSymbol plus;
  FourierSymbol minus;
  FourierSymbol log_branch;  // continuous log of z^{-n} s, principal at theta = 0
  double residual = 0.0;     // relative sup error of the reconstruction

  cplx reconstruct(double theta) const;
};

struct LogSplitOptions {
  double tolerance = 1e-9;
  double rel_trim = 1e-16;
  int max_grid = 1 << 18;
};

LogSplit log_split(const FourierSymbol& s, const LogSplitOptions& opts = {});

}  // namespace torsionlab::symbols
