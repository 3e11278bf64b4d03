#pragma once

#include <string>

#include "torsionlab/types.hpp"

namespace torsionlab::sections {

// Dense N x N corner of an operator on the Hardy space, in the basis
// e_0, e_1, ... of nonnegative Fourier modes.
struct OperatorSection {
  Matrix entries;
  int pad_used = 0;
  std::string provenance;

  int dim() const { return static_cast<int>(entries.rows()); }
};

}  // namespace torsionlab::sections
