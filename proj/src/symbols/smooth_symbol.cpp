#include "torsionlab/symbols/smooth_symbol.hpp"

#include <cmath>

namespace torsionlab::symbols {

cplx SmoothSymbol::operator()(double theta) const {
  return rational(theta) * std::exp(exponent(theta));
}

FourierSymbol SmoothSymbol::to_fourier(double rel_trim) const {
  if (exponent.is_zero()) {
    // Enough Laurent terms that the dropped tail is negligible.
    for (int K = 64;; K *= 2) {
      auto lc = laurent_coeffs(rational, K);
      if (lc.tail_bound <= 1e-17 * std::max(1.0, std::abs(rational.scale())) || K > (1 << 16))
        return FourierSymbol(lc.symbol.coeffs(), rel_trim);
    }
  }
  const int min_grid = 4 * exponent.bandwidth() + 64;
  return FourierSymbol::from_function([this](double th) { return (*this)(th); }, rel_trim, min_grid,
                                      1 << 20);
}

SmoothSymbol SmoothSymbol::operator*(const SmoothSymbol& o) const {
  return {rational * o.rational, exponent + o.exponent};
}

SmoothSymbol SmoothSymbol::inverse() const { return {rational.inverse(), -exponent}; }

SmoothSymbol SmoothSymbol::conjugate() const { return {rational.conjugate(), exponent.conjugate()}; }

SmoothSymbol SmoothSymbol::from_log_split(const LogSplit& split) {
  return {RationalSymbol::z_power(split.winding), split.log_branch};
}

}  // namespace torsionlab::symbols
