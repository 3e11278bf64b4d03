#pragma once

#include <optional>

#include "torsionlab/sections/determinant.hpp"
#include "torsionlab/sections/stabilize.hpp"
#include "torsionlab/sections/word.hpp"
#include "torsionlab/symbols/fourier_symbol.hpp"
#include "torsionlab/torsion/result.hpp"

namespace torsionlab::torsion {

struct DetOptions {
  sections::DetSchedule schedule;
  sections::StabilizeOptions stabilize;
  std::optional<int> pad;       // default: N for the stabilized path
  bool force_stabilized = false;
};

// det(A B A^-1 B^-1) of plain padded sections when both indices vanish and
// the sections are invertible; otherwise the leading corner (N per block) of
// the stabilized commutator on the tripled space.
TorsionResult torsion_det(const sections::Factor& a, const sections::Factor& b, const DetOptions& opts = {});
TorsionResult torsion_det(const symbols::FourierSymbol& f, const symbols::FourierSymbol& g,
                          const DetOptions& opts = {});

// One stabilized evaluation: the corner determinant for block dimension N + pad.
cplx stabilized_commutator_det(const sections::Factor& a, const sections::Factor& b, int N, int pad,
                               const sections::StabilizeOptions& opts = {});

}  // namespace torsionlab::torsion
