#include "torsionlab/funcalc/majorant.hpp"

#include <cmath>
#include <functional>

#include "torsionlab/errors.hpp"

namespace torsionlab::funcalc {

using sections::FunctionKind;
using sections::FunctionSpec;

namespace {

// Sums weight(k) |c_k| x^{k - shift} over k >= shift. The tail is the sum of
// the same terms over [K, 2K) where K is the series length at radius x.
MajorantValue sum_series(const FunctionSpec& f, double x, int shift, const std::function<double(int)>& weight) {
  if (f.kind() != FunctionKind::entire_series) throw DomainError("majorant needs an entire series, got " + f.name());
  if (x < 0) throw DomainError("majorant needs a nonnegative argument");
  MajorantValue out;
  if (f.is_polynomial()) {
    const auto& c = f.polynomial_coeffs();
    for (int k = shift; k < static_cast<int>(c.size()); ++k)
      out.value += weight(k) * std::abs(c[k]) * std::pow(x, k - shift);
    return out;
  }
  const int K = std::max(f.terms_for_radius(x) + 8, shift + 8);
  for (int k = shift; k < 2 * K; ++k) {
    const double term = weight(k) * std::abs(f.coefficient(k)) * std::pow(x, k - shift);
    (k < K ? out.value : out.tail) += term;
  }
  if (!std::isfinite(out.value) || out.tail > 1e-10 * std::max(1.0, out.value))
    throw NumericalError("majorant series of " + f.name() + " diverges at " + std::to_string(x));
  return out;
}

}  // namespace

MajorantValue majorant(const FunctionSpec& f, double x) {
  return sum_series(f, x, 0, [](int) { return 1.0; });
}

MajorantValue majorant_second_derivative(const FunctionSpec& f, double x) {
  return sum_series(f, x, 2, [](int k) { return static_cast<double>(k) * (k - 1); });
}

}  // namespace torsionlab::funcalc
