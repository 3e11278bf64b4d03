#include "torsionlab/funcalc/index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "torsionlab/errors.hpp"
#include "torsionlab/symbols/argument.hpp"

namespace torsionlab::funcalc {

using symbols::FourierSymbol;

IndexComparison index_of_composition(const symbols::Polynomial& f, const FourierSymbol& base) {
  if (f.degree() < 0) throw DomainError("zero polynomial");
  const auto samples = base.sample(symbols::winding_grid(std::max(base.bandwidth(), 1)));
  const double scale = std::max(1.0, base.sup_norm());
  IndexComparison out;
  for (const auto& root : f.roots()) {
    double dist = std::numeric_limits<double>::infinity();
    for (const auto& v : samples) dist = std::min(dist, std::abs(v - root.value));
    if (dist < 1e-6 * scale) throw DomainError("polynomial root lies on the image of the circle");
    out.formula += root.multiplicity * symbols::numerical_index(base - FourierSymbol::constant(root.value));
  }
  FourierSymbol composed;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
    composed = composed * base + FourierSymbol::constant(*it);
  out.computed = symbols::numerical_index(composed);
  return out;
}

}  // namespace torsionlab::funcalc
