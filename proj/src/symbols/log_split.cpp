#include "torsionlab/symbols/log_split.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "torsionlab/errors.hpp"
#include "torsionlab/symbols/argument.hpp"

namespace torsionlab::symbols {

cplx LogSplit::reconstruct(double theta) const {
  return std::polar(1.0, winding * theta) * std::exp(log_branch(theta));
}

LogSplit log_split(const FourierSymbol& s, const LogSplitOptions& opts) {
  LogSplit out;
  out.winding = winding_number(s);
  const int n = out.winding;
  const double accept = std::max(opts.rel_trim, 1e-14);
  for (int L = winding_grid(s.bandwidth()); L <= opts.max_grid; L *= 2) {
    auto v = s.sample(L);
    for (int j = 0; j < L; ++j) v[j] *= std::polar(1.0, -n * kTwoPi * j / L);
    v.push_back(v.front());
    auto lg = continuous_log(v, 0.0);
    lg.log_values.pop_back();
    FourierSymbol f = FourierSymbol::from_samples(lg.log_values, opts.rel_trim);

    double peak = 0.0, top = 0.0;
    for (const auto& [k, c] : f.coeffs()) {
      peak = std::max(peak, std::abs(c));
      if (std::abs(k) >= 3 * L / 8) top = std::max(top, std::abs(c));
    }
    if (top > accept * std::max(peak, 1.0)) continue;

    out.log_branch = f;
    out.plus = riesz_project(f, HardyPart::plus);
    out.minus = riesz_project(f, HardyPart::minus);

    // Reconstruction checked off the fitting grid.
    const int R = 2 * L;
    const double shift = kPi / R;
    auto sv = s.sample(R, shift);
    auto fv = f.sample(R, shift);
    double res = 0.0;
    for (int j = 0; j < R; ++j) {
      const double th = shift + kTwoPi * j / R;
      const cplx rec = std::polar(1.0, n * th) * std::exp(fv[j]);
      res = std::max(res, std::abs(rec - sv[j]) / std::abs(sv[j]));
    }
    out.residual = res;
    if (res > opts.tolerance) {
      throw ResolutionError("log split reconstruction residual " + std::to_string(res) +
                            " exceeds tolerance");
    }
    return out;
  }
  throw ResolutionError("log split did not resolve within " + std::to_string(opts.max_grid) + " points");
}

}  // namespace torsionlab::symbols
