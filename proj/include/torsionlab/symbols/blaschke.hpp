#pragma once

#include <utility>
#include <vector>

#include "torsionlab/symbols/polynomial.hpp"
#include "torsionlab/symbols/rational_symbol.hpp"

namespace torsionlab::symbols {

// B_a(z) = (|a|/a) (a - z) / (1 - conj(a) z), and B_0 = z.
RationalSymbol blaschke_factor(cplx a);

struct BlaschkeFactorization {
  std::vector<cplx> disk_zeros;  // with multiplicity
  RationalSymbol outer;
  double residual = 0.0;  // sup over 1024 circle points of |prod B * outer - r|

  RationalSymbol blaschke_product() const;
};

BlaschkeFactorization blaschke_factorize(const RationalSymbol& r);

struct DiskRegion {
  cplx center = 0.0;
  double radius = 1.0;
};

struct SpectralFactors {
  RationalSymbol p;  // prod (z - lambda)^{ord} over roots inside the region
  RationalSymbol q;  // the rest; no roots in the region
};

// Throws DomainError for a root within tol.circle of the region boundary.
SpectralFactors factor_on_spectrum(const Polynomial& f, const DiskRegion& region = {},
                                   const Tolerances& tol = default_tolerances());

}  // namespace torsionlab::symbols
