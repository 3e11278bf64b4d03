#pragma once

#include "torsionlab/symbols/rational_symbol.hpp"
#include "torsionlab/torsion/result.hpp"

namespace torsionlab::torsion {

struct TameSymbolValue {
  cplx location = 0.0;
  cplx value = 1.0;
  int ord_f = 0;
  int ord_g = 0;
};

// c_lambda(f, g) = (-1)^{ord f * ord g} f^{ord g} / g^{ord f} at lambda, with
// the common (z - lambda) powers cancelled before evaluation.
TameSymbolValue tame_symbol(const symbols::RationalSymbol& f, const symbols::RationalSymbol& g,
                            cplx lambda);

// Product of tame symbols over every zero and pole of f and g in the open
// disk. Exact; err_estimate 0.
TorsionResult torsion_tame(const symbols::RationalSymbol& f, const symbols::RationalSymbol& g);

}  // namespace torsionlab::torsion
