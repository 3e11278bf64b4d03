#include "torsionlab/symbols/argument.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "torsionlab/errors.hpp"
#include "torsionlab/util/fft.hpp"

namespace torsionlab::symbols {

ContinuousLog continuous_log(const std::vector<cplx>& samples, double theta0,
                             double vanish_tol) {
  if (samples.size() < 3) throw ResolutionError("continuous log needs at least 3 samples");
  double peak = 0.0;
  double floor = std::numeric_limits<double>::infinity();
  for (const auto& v : samples) {
    peak = std::max(peak, std::abs(v));
    floor = std::min(floor, std::abs(v));
  }
  if (!(floor > vanish_tol * peak)) {
    throw DomainError("symbol vanishes on the unit circle (min modulus " + std::to_string(floor) + ")");
  }
  ContinuousLog out;
  out.theta0 = theta0;
  out.log_values.resize(samples.size());
  double arg = std::arg(samples[0]);
  out.log_values[0] = {std::log(std::abs(samples[0])), arg};
  for (std::size_t j = 1; j < samples.size(); ++j) {
    const double step = std::arg(samples[j] / samples[j - 1]);
    if (std::abs(step) > kPi / 2) {
      throw ResolutionError("argument jump " + std::to_string(step) + " exceeds pi/2 at sample " +
                            std::to_string(j) + " of " + std::to_string(samples.size() - 1));
    }
    arg += step;
    out.log_values[j] = {std::log(std::abs(samples[j])), arg};
  }
  const double turns = (arg - std::arg(samples[0])) / kTwoPi;
  out.winding = static_cast<int>(std::lround(turns));
  if (std::abs(turns - out.winding) > 0.1) {
    throw ResolutionError("argument increment " + std::to_string(turns) + " turns is not near an integer");
  }
  return out;
}

int winding_grid(int bandwidth) { return util::next_pow2(std::max(1024, 64 * bandwidth)); }

int winding_number(const FourierSymbol& s) {
  const int L = winding_grid(s.bandwidth());
  auto v = s.sample(L);
  v.push_back(v.front());
  return continuous_log(v, 0.0).winding;
}

int winding_number(const RationalSymbol& r) { return r.winding_number(); }

int winding_number(const std::function<cplx(double)>& fn, int grid) {
  std::vector<cplx> v(grid + 1);
  for (int j = 0; j < grid; ++j) v[j] = fn(kTwoPi * j / grid);
  v[grid] = v[0];
  return continuous_log(v, 0.0).winding;
}

int numerical_index(const FourierSymbol& s) { return -winding_number(s); }

int numerical_index(const RationalSymbol& r) { return -r.winding_number(); }

}  // namespace torsionlab::symbols
