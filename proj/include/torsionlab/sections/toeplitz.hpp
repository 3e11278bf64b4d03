#pragma once

#include "torsionlab/sections/operator_section.hpp"
#include "torsionlab/symbols/fourier_symbol.hpp"

namespace torsionlab::sections {

// (j, k) entry c_{j-k}.
OperatorSection toeplitz_section(const symbols::FourierSymbol& s, int N);
Matrix toeplitz_matrix(const symbols::FourierSymbol& s, int N);

// The two off-diagonal blocks of multiplication by s against the Hardy
// projection P: lower = (I-P) s P with (j,k) = c_{-(j+k+1)}, upper =
// P s (I-P) with (j,k) = c_{j+k+1}.
struct HankelBlocks {
  OperatorSection lower;
  OperatorSection upper;
  bool exact = true;  // false when N is below the bandwidth

  // Hilbert-Schmidt norm of [s, P], i.e. of both blocks together.
  double hilbert_schmidt() const;
};

HankelBlocks hankel_blocks(const symbols::FourierSymbol& s, int N);

}  // namespace torsionlab::sections
