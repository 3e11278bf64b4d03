#pragma once

#include "torsionlab/symbols/fourier_symbol.hpp"
#include "torsionlab/symbols/polynomial.hpp"

namespace torsionlab::funcalc {

struct IndexComparison {
  int computed = 0;  // index of T_{f o base} by winding
  int formula = 0;   // sum over roots of ord * index(T_{base - lambda})
};

// Throws DomainError when a root of f lies on the image of the circle.
IndexComparison index_of_composition(const symbols::Polynomial& f, const symbols::FourierSymbol& base);

}  // namespace torsionlab::funcalc
