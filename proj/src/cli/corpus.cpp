#include "torsionlab/cli/corpus.hpp"

#include <cmath>

namespace torsionlab::cli {

using symbols::FourierSymbol;
using symbols::RationalSymbol;

double Corpus::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

int Corpus::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

cplx Corpus::point_inside(double rmin, double rmax) { return std::polar(uniform(rmin, rmax), uniform(0, kTwoPi)); }

cplx Corpus::point_outside(double rmin, double rmax) { return std::polar(uniform(rmin, rmax), uniform(0, kTwoPi)); }

cplx Corpus::unit_scale() { return std::polar(std::exp(uniform(std::log(0.5), std::log(2.0))), uniform(0, kTwoPi)); }

FourierSymbol Corpus::trig_polynomial(int K, double amplitude) {
  FourierSymbol::Coeffs c;
  for (int n = -K; n <= K; ++n) c[n] = std::polar(uniform(0, amplitude / (1 + std::abs(n))), uniform(0, kTwoPi));
  return FourierSymbol(c);
}

FourierSymbol Corpus::real_trig_polynomial(int K, double amplitude) {
  FourierSymbol::Coeffs c;
  c[0] = uniform(-amplitude, amplitude);
  for (int n = 1; n <= K; ++n) {
    const cplx v = std::polar(uniform(0, amplitude / (1 + n)), uniform(0, kTwoPi));
    c[n] = v;
    c[-n] = std::conj(v);
  }
  return FourierSymbol(c);
}

FourierSymbol Corpus::real_nonvanishing(int K) {
  FourierSymbol p = real_trig_polynomial(K, 1.0);
  double total = 0.0;
  for (const auto& [n, c] : p.coeffs())
    if (n != 0) total += std::abs(c);
  const double offset = (total + uniform(0.3, 1.5)) * (integer(0, 1) ? 1.0 : -1.0);
  return p - FourierSymbol::constant(p.coeff(0)) + FourierSymbol::constant(offset);
}

RationalSymbol Corpus::rational(int max_factors, int max_winding) {
  return rational_in(max_factors, max_winding, 0.8, 1.25);
}

RationalSymbol Corpus::rational_in(int max_factors, int max_winding, double inner, double outer) {
  for (;;) {
    std::vector<cplx> zeros, poles;
    const int nz = integer(0, max_factors), np = integer(0, max_factors);
    for (int k = 0; k < nz; ++k) zeros.push_back(integer(0, 1) ? point_inside(0.1, inner) : point_outside(outer, 3.0));
    for (int k = 0; k < np; ++k) poles.push_back(integer(0, 1) ? point_inside(0.1, inner) : point_outside(outer, 3.0));
    const RationalSymbol r(unit_scale(), integer(-1, 1), zeros, poles);
    if (std::abs(r.winding_number()) <= max_winding) return r;
  }
}

symbols::SmoothSymbol Corpus::smooth(int max_K, int max_winding, double amplitude) {
  // Points stay outside 0.7 < |z| < 1.4 so finite sections converge by
  // N = 64 to 128 (the error decays like 0.7^N).
  const RationalSymbol r = rational_in(2, max_winding, 0.7, 1.4);
  return {r, trig_polynomial(integer(1, max_K), amplitude)};
}

symbols::Polynomial Corpus::polynomial(int max_degree) {
  const int d = integer(1, max_degree);
  std::vector<cplx> roots;
  for (int k = 0; k < d; ++k) roots.push_back(integer(0, 1) ? point_inside(0.05, 0.85) : point_outside(1.15, 3.0));
  return symbols::Polynomial::from_roots(roots, unit_scale());
}

}  // namespace torsionlab::cli
