#pragma once

#include <vector>

#include <unsupported/Eigen/FFT>

#include "torsionlab/types.hpp"

namespace torsionlab::util {

// X_k = sum_j x_j e^{-2 pi i jk/L}, unscaled.
inline std::vector<cplx> dft_forward(const std::vector<cplx>& x) {
  Eigen::FFT<double> fft;
  std::vector<cplx> out;
  fft.fwd(out, x);
  return out;
}

// x_j = sum_k X_k e^{+2 pi i jk/L}, unscaled (no 1/L).
inline std::vector<cplx> dft_backward_unscaled(const std::vector<cplx>& X) {
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  std::vector<cplx> out;
  fft.inv(out, X);
  return out;
}

inline int next_pow2(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace torsionlab::util
