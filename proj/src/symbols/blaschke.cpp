#include "torsionlab/symbols/blaschke.hpp"

#include <algorithm>
#include <cmath>

#include "torsionlab/errors.hpp"

namespace torsionlab::symbols {

RationalSymbol blaschke_factor(cplx a) {
  if (std::abs(a) >= 1.0) throw DomainError("Blaschke factor needs |a| < 1");
  if (a == cplx(0.0)) return RationalSymbol::z_power(1);
  // (|a|/a)(a - z)/(1 - conj(a) z) = (1/|a|) (z - a)/(z - 1/conj(a))
  return RationalSymbol(1.0 / std::abs(a), 0, {a}, {1.0 / std::conj(a)});
}

RationalSymbol BlaschkeFactorization::blaschke_product() const {
  RationalSymbol b = RationalSymbol::constant(1.0);
  for (const auto& a : disk_zeros) b = b * blaschke_factor(a);
  return b;
}

BlaschkeFactorization blaschke_factorize(const RationalSymbol& r) {
  if (!r.circle_regular()) throw DomainError("Blaschke factorization of a symbol vanishing on the circle");
  if (r.monomial_exp() < 0) throw DomainError("symbol is not in H-infinity: pole at 0");
  for (const auto& b : r.poles())
    if (std::abs(b) < 1.0) throw DomainError("symbol is not in H-infinity: pole inside the disk");
  BlaschkeFactorization out;
  for (int k = 0; k < r.monomial_exp(); ++k) out.disk_zeros.push_back(0.0);
  for (const auto& a : r.zeros())
    if (std::abs(a) < 1.0) out.disk_zeros.push_back(a);
  out.outer = r / out.blaschke_product();
  if (out.outer.monomial_exp() != 0) throw NumericalError("outer factor retained a zero at the origin");
  for (const auto& a : out.outer.zeros())
    if (std::abs(a) <= 1.0) throw NumericalError("outer factor retained a disk zero");
  for (const auto& b : out.outer.poles())
    if (std::abs(b) <= 1.0) throw NumericalError("outer factor retained a disk pole");
  const RationalSymbol prod = out.blaschke_product();
  for (int j = 0; j < 1024; ++j) {
    const double th = kTwoPi * j / 1024;
    out.residual = std::max(out.residual, std::abs(prod(th) * out.outer(th) - r(th)));
  }
  return out;
}

SpectralFactors factor_on_spectrum(const Polynomial& f, const DiskRegion& region,
                                   const Tolerances& tol) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  std::vector<cplx> inside, outside;
  for (const auto& root : f.roots()) {
    const double d = std::abs(root.value - region.center);
    if (std::abs(d - region.radius) < tol.circle)
      throw DomainError("polynomial has a root on the region boundary");
    auto& dst = d < region.radius ? inside : outside;
    for (int k = 0; k < root.multiplicity; ++k) dst.push_back(root.value);
  }
  return {RationalSymbol(1.0, 0, inside, {}, tol), RationalSymbol(f.leading(), 0, outside, {}, tol)};
}

}  // namespace torsionlab::symbols
