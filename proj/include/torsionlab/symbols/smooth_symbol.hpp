#pragma once

#include "torsionlab/symbols/fourier_symbol.hpp"
#include "torsionlab/symbols/log_split.hpp"
#include "torsionlab/symbols/rational_symbol.hpp"

namespace torsionlab::symbols {

// s = r * exp(h) with r rational (circle-regular) and h a Fourier symbol.
// This is the structured form of the smooth symbols the library works with.
struct SmoothSymbol {
  RationalSymbol rational;
  FourierSymbol exponent;

  cplx operator()(double theta) const;
  int winding_number() const { return rational.winding_number(); }
  FourierSymbol to_fourier(double rel_trim = 1e-15) const;
  SmoothSymbol operator*(const SmoothSymbol& o) const;
  SmoothSymbol inverse() const;
  SmoothSymbol conjugate() const;

  static SmoothSymbol from_rational(const RationalSymbol& r) { return {r, {}}; }
  static SmoothSymbol from_exponent(const FourierSymbol& h) { return {RationalSymbol(), h}; }
  // Structured form of a plain Fourier symbol: z^n * exp(log branch).
  static SmoothSymbol from_log_split(const LogSplit& split);
};

}  // namespace torsionlab::symbols
