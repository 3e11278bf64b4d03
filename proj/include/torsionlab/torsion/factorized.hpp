#pragma once

#include "torsionlab/symbols/fourier_symbol.hpp"
#include "torsionlab/symbols/smooth_symbol.hpp"
#include "torsionlab/torsion/result.hpp"

namespace torsionlab::torsion {

// Three-factor split s = s0 s1 s2 of a structured smooth symbol r e^h:
//   s0: Blaschke quotient carrying the disk zeros/poles of r and z^m,
//   s1: the remaining rational part (invertible in H-infinity) times e^{h+},
//   s2: e^{h-}.
struct ThreeFactor {
  symbols::RationalSymbol rational;  // r = s0 * (rational part of s1)
  symbols::FourierSymbol h_plus;     // nonnegative frequencies of h
  symbols::FourierSymbol h_minus;    // negative frequencies of h

  // Taylor coefficients k = 1..K of log s1.
  std::vector<cplx> log_s1_coeffs(int K) const;
  // s0 s1 / (z - a)^{ord} at a disk point a.
  cplx regular_value_at(cplx a) const;
  // conj(conj(s2)(a)) = exp(sum_{k>0} h_{-k} conj(a)^k).
  cplx conj_of_conj_s2_at(cplx a) const;
};

ThreeFactor three_factor(const symbols::SmoothSymbol& s);

// Discrete part (tame symbols and conjugate tame-symbol ratios) times the
// continuous part exp(sum_{n>0} (-n) (log s1)_n (h-)_{-n}) / (same with f, g
// swapped). Exact for structured input.
TorsionResult torsion_factorized(const symbols::SmoothSymbol& f, const symbols::SmoothSymbol& g);
// Plain Fourier input goes through log_split; err_estimate reflects the split
// residuals.
TorsionResult torsion_factorized(const symbols::FourierSymbol& f, const symbols::FourierSymbol& g);

}  // namespace torsionlab::torsion
