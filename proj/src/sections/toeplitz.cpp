#include "torsionlab/sections/toeplitz.hpp"

#include <cmath>
#include <stdexcept>

namespace torsionlab::sections {

Matrix toeplitz_matrix(const symbols::FourierSymbol& s, int N) {
  if (N < 0) throw std::invalid_argument("section dimension must be nonnegative");
  Matrix T = Matrix::Zero(N, N);
  for (const auto& [n, c] : s.coeffs()) {
    if (std::abs(n) >= N) continue;
    if (n >= 0) {
      for (int k = 0; k + n < N; ++k) T(k + n, k) = c;
    } else {
      for (int j = 0; j - n < N; ++j) T(j, j - n) = c;
    }
  }
  return T;
}

OperatorSection toeplitz_section(const symbols::FourierSymbol& s, int N) {
  return {toeplitz_matrix(s, N), 0, "T_s"};
}

double HankelBlocks::hilbert_schmidt() const {
  return std::sqrt(lower.entries.squaredNorm() + upper.entries.squaredNorm());
}

HankelBlocks hankel_blocks(const symbols::FourierSymbol& s, int N) {
  HankelBlocks h;
  h.lower.entries = Matrix::Zero(N, N);
  h.upper.entries = Matrix::Zero(N, N);
  h.lower.provenance = "(I-P) s P";
  h.upper.provenance = "P s (I-P)";
  for (int j = 0; j < N; ++j) {
    for (int k = 0; k < N; ++k) {
      h.lower.entries(j, k) = s.coeff(-(j + k + 1));
      h.upper.entries(j, k) = s.coeff(j + k + 1);
    }
  }
  h.exact = N >= s.bandwidth();
  return h;
}

}  // namespace torsionlab::sections
