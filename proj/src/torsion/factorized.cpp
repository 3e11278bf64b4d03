#include "torsionlab/torsion/factorized.hpp"

#include <cmath>
#include <sstream>

#include "torsionlab/errors.hpp"
#include "torsionlab/symbols/log_split.hpp"

namespace torsionlab::torsion {

using symbols::RationalSymbol;

namespace {

// Analytic value of a Fourier symbol with nonnegative frequencies at a disk point.
cplx analytic_value(const symbols::FourierSymbol& h, cplx a) {
  cplx sum = 0.0;
  for (const auto& [n, c] : h.coeffs()) sum += c * std::pow(a, n);
  return sum;
}

std::vector<cplx> all_disk_points(const RationalSymbol& f, const RationalSymbol& g) {
  std::vector<cplx> pts = f.disk_points();
  for (const auto& q : g.disk_points()) {
    bool seen = false;
    for (const auto& p : pts) seen = seen || std::abs(p - q) < f.tolerances().root;
    if (!seen) pts.push_back(q);
  }
  return pts;
}

// sum_{n>0} (-n) F_n G_{-n}: (1/2 pi i) int F dG for F analytic, G anti-analytic.
cplx continuous_pairing(const std::vector<cplx>& F, const symbols::FourierSymbol& g_minus) {
  cplx sum = 0.0;
  for (const auto& [n, c] : g_minus.coeffs()) {
    const int k = -n;
    if (k >= 1 && k <= static_cast<int>(F.size())) sum += -static_cast<double>(k) * F[k - 1] * c;
  }
  return sum;
}

}  // namespace

ThreeFactor three_factor(const symbols::SmoothSymbol& s) {
  if (!s.rational.circle_regular()) throw DomainError("factorization of a symbol vanishing on the circle");
  return {s.rational, symbols::riesz_project(s.exponent, symbols::HardyPart::plus),
          symbols::riesz_project(s.exponent, symbols::HardyPart::minus)};
}

std::vector<cplx> ThreeFactor::log_s1_coeffs(int K) const {
  // Each zero/pole alpha of s1 lies outside the closed disk:
  // log(z - alpha) = log(-alpha) - sum_k z^k / (k alpha^k).
  // Disk zeros a of r contribute |a|(z - 1/conj a) to s1.
  std::vector<cplx> out(K, 0.0);
  auto add = [&](cplx alpha, double sign) {
    cplx p = 1.0;
    for (int k = 1; k <= K; ++k) {
      p /= alpha;
      out[k - 1] -= sign * p / static_cast<double>(k);
    }
  };
  for (const auto& a : rational.zeros()) add(std::abs(a) < 1.0 ? 1.0 / std::conj(a) : a, 1.0);
  for (const auto& b : rational.poles()) add(std::abs(b) < 1.0 ? 1.0 / std::conj(b) : b, -1.0);
  for (int k = 1; k <= K; ++k) out[k - 1] += h_plus.coeff(k);
  return out;
}

cplx ThreeFactor::regular_value_at(cplx a) const {
  return rational.regular_value_at(a) * std::exp(analytic_value(h_plus, a));
}

cplx ThreeFactor::conj_of_conj_s2_at(cplx a) const {
  cplx sum = 0.0;
  for (const auto& [n, c] : h_minus.coeffs()) sum += c * std::pow(std::conj(a), -n);
  return std::exp(sum);
}

TorsionResult torsion_factorized(const symbols::SmoothSymbol& f, const symbols::SmoothSymbol& g) {
  const ThreeFactor F = three_factor(f);
  const ThreeFactor G = three_factor(g);
  TorsionResult r;
  r.method = Method::factorized;

  cplx discrete = 1.0;
  for (const auto& a : all_disk_points(f.rational, g.rational)) {
    const int of = f.rational.ord_at(a);
    const int og = g.rational.ord_at(a);
    const double sign = (of * og) % 2 == 0 ? 1.0 : -1.0;
    // c_a(f0 f1, g0 g1)
    discrete *= sign * std::pow(F.regular_value_at(a), og) / std::pow(G.regular_value_at(a), of);
    // conj c_a(conj g0, conj f2) = conj(conj f2 (a))^{ord_a g0}; likewise for f0, g2.
    discrete *= std::pow(F.conj_of_conj_s2_at(a), og);
    discrete /= std::pow(G.conj_of_conj_s2_at(a), of);
  }

  const int Kf = G.h_minus.bandwidth();
  const int Kg = F.h_minus.bandwidth();
  const cplx s12 = continuous_pairing(F.log_s1_coeffs(Kf), G.h_minus);
  const cplx s21 = continuous_pairing(G.log_s1_coeffs(Kg), F.h_minus);
  r.value = discrete * std::exp(s12 - s21);
  std::ostringstream os;
  os << "discrete " << discrete << ", continuous exp(" << (s12 - s21) << ")";
  r.notes.push_back(os.str());
  if (!std::isfinite(std::abs(r.value)) || r.value == cplx(0.0))
    throw NumericalError("factorized torsion is not a finite unit");
  return r;
}

TorsionResult torsion_factorized(const symbols::FourierSymbol& f, const symbols::FourierSymbol& g) {
  const auto sf = symbols::log_split(f);
  const auto sg = symbols::log_split(g);
  TorsionResult r = torsion_factorized(symbols::SmoothSymbol::from_log_split(sf),
                                       symbols::SmoothSymbol::from_log_split(sg));
  r.err_estimate = std::abs(r.value) * 4.0 * (sf.residual + sg.residual);
  r.notes.push_back("structured form from log splitting");
  return r;
}

}  // namespace torsionlab::torsion
