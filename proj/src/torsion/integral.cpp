#include "torsionlab/torsion/integral.hpp"

#include <algorithm>
#include <cmath>

#include "torsionlab/errors.hpp"
#include "torsionlab/symbols/argument.hpp"
#include "torsionlab/util/fft.hpp"

namespace torsionlab::torsion {

namespace {

cplx integral_exponent(const symbols::FourierSymbol& f, const symbols::FourierSymbol& g,
                       const symbols::FourierSymbol& dg, double theta0, int L) {
  auto fv = f.sample(L, theta0);
  auto gv = g.sample(L, theta0);
  const auto dgv = dg.sample(L, theta0);
  fv.push_back(fv.front());
  gv.push_back(gv.front());
  const auto lf = symbols::continuous_log(fv, theta0);
  const auto lg = symbols::continuous_log(gv, theta0);
  const double n = lf.winding;
  const double m = lg.winding;
  const double h = kTwoPi / L;

  // log f = Lf + i n (theta - theta0), log g = Lg + i m (theta - theta0) with Lf, Lg periodic.
  cplx I1 = 0.0;        // int Lf dlog g
  cplx int_Lg = 0.0;    // int Lg dtheta
  for (int j = 0; j < L; ++j) {
    const double s = h * j;
    const cplx Lf = lf.log_values[j] - kI * n * s;
    const cplx Lg = lg.log_values[j] - kI * m * s;
    I1 += Lf * (dgv[j] / gv[j]);
    int_Lg += Lg;
  }
  I1 *= h;
  int_Lg *= h;
  const cplx log_g0 = lg.log_values[0];
  // i n int (theta - theta0) dlog g, integrated by parts.
  const cplx I2 = kI * n * (kTwoPi * log_g0 + 2.0 * kPi * kPi * kI * m - int_Lg);
  return I1 + I2 - log_g0 * (kTwoPi * kI * n);
}

}  // namespace

TorsionResult torsion_integral(const symbols::FourierSymbol& f, const symbols::FourierSymbol& g,
                               const IntegralOptions& opts) {
  TorsionResult r;
  r.method = Method::integral;
  const symbols::FourierSymbol dg = g.derivative();
  int L = util::next_pow2(std::max({opts.min_grid, 1024, 64 * std::max(f.bandwidth(), g.bandwidth())}));
  cplx prev = std::exp(integral_exponent(f, g, dg, opts.basepoint, L) / (kTwoPi * kI));
  r.dims.push_back(L);
  r.history.push_back(prev);
  for (L *= 2; L <= opts.max_grid; L *= 2) {
    const cplx next = std::exp(integral_exponent(f, g, dg, opts.basepoint, L) / (kTwoPi * kI));
    r.dims.push_back(L);
    r.history.push_back(next);
    r.err_estimate = std::abs(next - prev);
    r.value = next;
    if (r.err_estimate <= opts.rel_tol * std::abs(next)) return r;
    prev = next;
  }
  r.notes.push_back("grid doubling did not reach the relative tolerance");
  return r;
}

}  // namespace torsionlab::torsion
