#include "torsionlab/torsion/tame.hpp"

#include <cmath>
#include <sstream>

#include "torsionlab/errors.hpp"

namespace torsionlab::torsion {

TameSymbolValue tame_symbol(const symbols::RationalSymbol& f, const symbols::RationalSymbol& g,
                            cplx lambda) {
  if (std::abs(lambda) >= 1.0) throw DomainError("tame symbol location must lie in the open unit disk");
  TameSymbolValue out;
  out.location = lambda;
  out.ord_f = f.ord_at(lambda);
  out.ord_g = g.ord_at(lambda);
  const cplx fr = f.regular_value_at(lambda);
  const cplx gr = g.regular_value_at(lambda);
  const double sign = (out.ord_f * out.ord_g) % 2 == 0 ? 1.0 : -1.0;
  out.value = sign * std::pow(fr, out.ord_g) / std::pow(gr, out.ord_f);
  if (!std::isfinite(std::abs(out.value)) || out.value == cplx(0.0)) {
    throw NumericalError("tame symbol quotient singular after cancellation");
  }
  return out;
}

TorsionResult torsion_tame(const symbols::RationalSymbol& f, const symbols::RationalSymbol& g) {
  if (!f.circle_regular() || !g.circle_regular()) {
    throw DomainError("tame path needs circle-regular rational symbols");
  }
  std::vector<cplx> points = f.disk_points();
  for (const auto& q : g.disk_points()) {
    bool seen = false;
    for (const auto& p : points) seen = seen || std::abs(p - q) < f.tolerances().root;
    if (!seen) points.push_back(q);
  }
  TorsionResult r;
  r.method = Method::tame;
  for (const auto& p : points) {
    const auto c = tame_symbol(f, g, p);
    r.value *= c.value;
    std::ostringstream os;
    os << "c_" << p << " = " << c.value << " (ord " << c.ord_f << "," << c.ord_g << ")";
    r.notes.push_back(os.str());
  }
  return r;
}

}  // namespace torsionlab::torsion
