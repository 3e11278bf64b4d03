#pragma once

#include <functional>
#include <map>
#include <vector>

#include "torsionlab/types.hpp"

namespace torsionlab::symbols {

// Band-limited function on the unit circle, s(e^{i theta}) = sum c_n e^{i n theta}.
// Coefficients are stored sparsely; exact zeros are never stored.
class FourierSymbol {
 public:
  using Coeffs = std::map<int, cplx>;

  FourierSymbol() = default;
  // Drops coefficients with |c_n| <= rel_trim * max |c|.
  explicit FourierSymbol(Coeffs coeffs, double rel_trim = 0.0);

  static FourierSymbol constant(cplx c);
  static FourierSymbol monomial(int n, cplx c = 1.0);

  // Coefficients from L equispaced samples at theta_j = 2 pi j / L, frequencies
  // folded into [-L/2, L/2).
  static FourierSymbol from_samples(const std::vector<cplx>& samples,
                                    double rel_trim);
  // Samples fn on grids of doubling size until the top quarter of the band is
  // below rel_trim relative to the largest coefficient. Throws
  // ResolutionError once max_grid is exceeded.
  static FourierSymbol from_function(const std::function<cplx(double)>& fn,
                                     double rel_trim, int min_grid = 64,
                                     int max_grid = 1 << 16);

  const Coeffs& coeffs() const { return coeffs_; }
  cplx coeff(int n) const;
  int bandwidth() const;
  int min_frequency() const;
  int max_frequency() const;
  bool is_zero() const { return coeffs_.empty(); }

  cplx operator()(double theta) const;
  // L samples at theta0 + 2 pi j / L, by FFT.
  std::vector<cplx> sample(int L, double theta0 = 0.0) const;

  FourierSymbol conjugate() const;
  // d/dtheta: c_n -> i n c_n.
  FourierSymbol derivative() const;
  FourierSymbol shifted(int k) const;  // multiplication by z^k

  FourierSymbol operator+(const FourierSymbol& o) const;
  FourierSymbol operator-(const FourierSymbol& o) const;
  FourierSymbol operator-() const;
  FourierSymbol operator*(const FourierSymbol& o) const;
  FourierSymbol operator*(cplx s) const;
  friend FourierSymbol operator*(cplx s, const FourierSymbol& f) { return f * s; }

  double sup_norm(int grid = 4096) const;
  double min_modulus(int grid) const;
  bool is_real(double tol = 1e-12) const;
  // Largest |c_n| among |n| > half the bandwidth, relative to max |c_n|.
  double tail_decay() const;

 private:
  Coeffs coeffs_;
};

enum class HardyPart { plus, minus };

// plus keeps n >= 0, minus keeps n < 0.
FourierSymbol riesz_project(const FourierSymbol& s, HardyPart part);

// sqrt(sum_{n != 0} |n| |c_n|^2).
double sobolev_half_seminorm(const FourierSymbol& s);

struct FourierInverse {
  FourierSymbol symbol;
  double residual = 0.0;  // sup |s * inv - 1| on a fine grid
};

// Reciprocal by FFT sampling. bandwidth < 0 keeps every untrimmed coefficient;
// otherwise the result is truncated to |n| <= bandwidth.
FourierInverse invert(const FourierSymbol& s, int bandwidth = -1);

// exp(h) by sampling.
FourierSymbol exp(const FourierSymbol& h, double rel_trim = 1e-15);

}  // namespace torsionlab::symbols
