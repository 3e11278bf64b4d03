#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "torsionlab/symbols/fourier_symbol.hpp"
#include "torsionlab/symbols/polynomial.hpp"
#include "torsionlab/symbols/rational_symbol.hpp"
#include "torsionlab/symbols/smooth_symbol.hpp"

namespace torsionlab::cli {

// Seeded generators for test corpora. Zeros and poles avoid the annulus
// 0.8 < |z| < 1.25.
class Corpus {
 public:
  explicit Corpus(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  int integer(int lo, int hi);  // inclusive
  cplx point_inside(double rmin = 0.1, double rmax = 0.8);
  cplx point_outside(double rmin = 1.25, double rmax = 3.0);
  cplx unit_scale();  // modulus in [0.5, 2], random phase

  // Laurent polynomial with |n| <= K and |c_n| <= amplitude / (1 + |n|).
  symbols::FourierSymbol trig_polynomial(int K, double amplitude);
  // Real-valued trig polynomial.
  symbols::FourierSymbol real_trig_polynomial(int K, double amplitude);
  // Nonvanishing real symbol c + real trig polynomial with |c| above the
  // coefficient sum (sign random).
  symbols::FourierSymbol real_nonvanishing(int K);

  // c z^m prod(z - a)/prod(z - b) with winding in [-max_winding, max_winding].
  symbols::RationalSymbol rational(int max_factors = 2, int max_winding = 2);
  // rational times exp(trig polynomial with K <= max_K); its zeros and poles
  // avoid the wider annulus 0.7 < |z| < 1.4.
  symbols::SmoothSymbol smooth(int max_K = 3, int max_winding = 2, double amplitude = 0.6);

  // Polynomial of degree 1..max_degree with roots away from the circle.
  symbols::Polynomial polynomial(int max_degree = 5);

  std::mt19937_64& engine() { return rng_; }

 private:
  symbols::RationalSymbol rational_in(int max_factors, int max_winding, double inner, double outer);
  std::mt19937_64 rng_;
};

}  // namespace torsionlab::cli
