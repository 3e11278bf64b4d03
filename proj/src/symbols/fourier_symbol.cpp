#include "torsionlab/symbols/fourier_symbol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "torsionlab/errors.hpp"
#include "torsionlab/util/fft.hpp"

namespace torsionlab::symbols {

namespace {

double max_abs(const FourierSymbol::Coeffs& c) {
  double m = 0.0;
  for (const auto& [n, v] : c) m = std::max(m, std::abs(v));
  return m;
}

// Coefficient map from samples, without trimming.
std::vector<cplx> raw_coefficients(const std::vector<cplx>& samples) {
  auto X = util::dft_forward(samples);
  const double inv = 1.0 / static_cast<double>(samples.size());
  for (auto& x : X) x *= inv;
  return X;
}

int folded_frequency(int k, int L) { return k < L / 2 ? k : k - L; }

// Shared adaptive loop for from_function and exp.
FourierSymbol adaptive(const std::function<std::vector<cplx>(int)>& sampler,
                       double rel_trim, int min_grid, int max_grid) {
  const double accept = std::max(rel_trim, 1e-14);
  for (int L = util::next_pow2(std::max(min_grid, 16)); L <= max_grid; L *= 2) {
    auto X = raw_coefficients(sampler(L));
    double peak = 0.0;
    double top = 0.0;
    for (int k = 0; k < L; ++k) {
      const int n = folded_frequency(k, L);
      const double a = std::abs(X[k]);
      peak = std::max(peak, a);
      if (std::abs(n) >= 3 * L / 8) top = std::max(top, a);
    }
    if (top <= accept * peak || peak == 0.0) {
      FourierSymbol::Coeffs c;
      for (int k = 0; k < L; ++k) c[folded_frequency(k, L)] = X[k];
      return FourierSymbol(std::move(c), rel_trim);
    }
  }
  throw ResolutionError("Fourier sampling did not resolve the symbol within " +
                        std::to_string(max_grid) + " points");
}

}  // namespace

FourierSymbol::FourierSymbol(Coeffs coeffs, double rel_trim) {
  const double cut = rel_trim * max_abs(coeffs);
  for (const auto& [n, v] : coeffs) {
    if (v != cplx(0.0) && std::abs(v) > cut) coeffs_.emplace(n, v);
  }
}

FourierSymbol FourierSymbol::constant(cplx c) { return FourierSymbol({{0, c}}); }

FourierSymbol FourierSymbol::monomial(int n, cplx c) { return FourierSymbol({{n, c}}); }

FourierSymbol FourierSymbol::from_samples(const std::vector<cplx>& samples,
                                          double rel_trim) {
  const int L = static_cast<int>(samples.size());
  auto X = raw_coefficients(samples);
  Coeffs c;
  for (int k = 0; k < L; ++k) c[folded_frequency(k, L)] = X[k];
  return FourierSymbol(std::move(c), rel_trim);
}

FourierSymbol FourierSymbol::from_function(const std::function<cplx(double)>& fn,
                                           double rel_trim, int min_grid,
                                           int max_grid) {
  return adaptive(
      [&](int L) {
        std::vector<cplx> v(L);
        for (int j = 0; j < L; ++j) v[j] = fn(kTwoPi * j / L);
        return v;
      },
      rel_trim, min_grid, max_grid);
}

cplx FourierSymbol::coeff(int n) const {
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? cplx(0.0) : it->second;
}

int FourierSymbol::bandwidth() const {
  if (coeffs_.empty()) return 0;
  return std::max(std::abs(coeffs_.begin()->first), std::abs(coeffs_.rbegin()->first));
}

int FourierSymbol::min_frequency() const {
  return coeffs_.empty() ? 0 : coeffs_.begin()->first;
}

int FourierSymbol::max_frequency() const {
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

cplx FourierSymbol::operator()(double theta) const {
  cplx sum = 0.0;
  for (const auto& [n, v] : coeffs_) sum += v * std::polar(1.0, n * theta);
  return sum;
}

std::vector<cplx> FourierSymbol::sample(int L, double theta0) const {
  std::vector<cplx> a(L, 0.0);
  for (const auto& [n, v] : coeffs_) {
    const int k = ((n % L) + L) % L;
    a[k] += v * std::polar(1.0, n * theta0);
  }
  return util::dft_backward_unscaled(a);
}

FourierSymbol FourierSymbol::conjugate() const {
  Coeffs c;
  for (const auto& [n, v] : coeffs_) c.emplace(-n, std::conj(v));
  return FourierSymbol(std::move(c));
}

FourierSymbol FourierSymbol::derivative() const {
  Coeffs c;
  for (const auto& [n, v] : coeffs_) c.emplace(n, kI * static_cast<double>(n) * v);
  return FourierSymbol(std::move(c));
}

FourierSymbol FourierSymbol::shifted(int k) const {
  Coeffs c;
  for (const auto& [n, v] : coeffs_) c.emplace(n + k, v);
  return FourierSymbol(std::move(c));
}

FourierSymbol FourierSymbol::operator+(const FourierSymbol& o) const {
  Coeffs c = coeffs_;
  for (const auto& [n, v] : o.coeffs_) c[n] += v;
  return FourierSymbol(std::move(c));
}

FourierSymbol FourierSymbol::operator-() const { return *this * cplx(-1.0); }

FourierSymbol FourierSymbol::operator-(const FourierSymbol& o) const {
  return *this + (-o);
}

FourierSymbol FourierSymbol::operator*(const FourierSymbol& o) const {
  Coeffs c;
  for (const auto& [n, v] : coeffs_)
    for (const auto& [m, w] : o.coeffs_) c[n + m] += v * w;
  return FourierSymbol(std::move(c));
}

FourierSymbol FourierSymbol::operator*(cplx s) const {
  Coeffs c;
  for (const auto& [n, v] : coeffs_) c.emplace(n, v * s);
  return FourierSymbol(std::move(c));
}

double FourierSymbol::sup_norm(int grid) const {
  double m = 0.0;
  for (const auto& v : sample(grid)) m = std::max(m, std::abs(v));
  return m;
}

double FourierSymbol::min_modulus(int grid) const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& v : sample(grid)) m = std::min(m, std::abs(v));
  return m;
}

bool FourierSymbol::is_real(double tol) const {
  const double scale = std::max(1.0, max_abs(coeffs_));
  for (const auto& [n, v] : coeffs_) {
    if (std::abs(v - std::conj(coeff(-n))) > tol * scale) return false;
  }
  return true;
}

double FourierSymbol::tail_decay() const {
  const double peak = max_abs(coeffs_);
  if (peak == 0.0) return 0.0;
  const int half = bandwidth() / 2;
  double tail = 0.0;
  for (const auto& [n, v] : coeffs_)
    if (std::abs(n) > half) tail = std::max(tail, std::abs(v));
  return tail / peak;
}

FourierSymbol riesz_project(const FourierSymbol& s, HardyPart part) {
  FourierSymbol::Coeffs c;
  for (const auto& [n, v] : s.coeffs()) {
    if ((part == HardyPart::plus) == (n >= 0)) c.emplace(n, v);
  }
  return FourierSymbol(std::move(c));
}

double sobolev_half_seminorm(const FourierSymbol& s) {
  double sum = 0.0;
  for (const auto& [n, v] : s.coeffs()) sum += std::abs(n) * std::norm(v);
  return std::sqrt(sum);
}

FourierInverse invert(const FourierSymbol& s, int bandwidth) {
  const int grid = util::next_pow2(std::max(1024, 64 * s.bandwidth()));
  const double floor = s.min_modulus(grid);
  if (floor < 1e-10 * std::max(1.0, s.sup_norm(grid))) {
    throw DomainError("cannot invert a symbol vanishing on the unit circle (min |s| = " +
                      std::to_string(floor) + ")");
  }
  FourierSymbol inv = adaptive(
      [&](int L) {
        auto v = s.sample(L);
        for (auto& x : v) x = 1.0 / x;
        return v;
      },
      1e-16, 2 * s.bandwidth() + 16, 1 << 20);
  if (bandwidth >= 0) {
    FourierSymbol::Coeffs c;
    for (const auto& [n, v] : inv.coeffs())
      if (std::abs(n) <= bandwidth) c.emplace(n, v);
    inv = FourierSymbol(std::move(c));
  }
  const int L = util::next_pow2(std::max(1024, 4 * (s.bandwidth() + inv.bandwidth())));
  auto a = s.sample(L);
  auto b = inv.sample(L);
  double residual = 0.0;
  for (int j = 0; j < L; ++j) residual = std::max(residual, std::abs(a[j] * b[j] - 1.0));
  return {std::move(inv), residual};
}

FourierSymbol exp(const FourierSymbol& h, double rel_trim) {
  return adaptive(
      [&](int L) {
        auto v = h.sample(L);
        for (auto& x : v) x = std::exp(x);
        return v;
      },
      rel_trim, 4 * h.bandwidth() + 16, 1 << 20);
}

}  // namespace torsionlab::symbols
