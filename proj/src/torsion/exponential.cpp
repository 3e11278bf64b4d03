#include "torsionlab/torsion/exponential.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "torsionlab/util/fft.hpp"

namespace torsionlab::torsion {

cplx berger_shaw_integral(const symbols::FourierSymbol& f, const symbols::FourierSymbol& g) {
  const int L = util::next_pow2(std::max(64, 2 * (f.bandwidth() + g.bandwidth()) + 2));
  const auto fv = f.sample(L);
  const auto dgv = g.derivative().sample(L);
  cplx sum = 0.0;
  for (int j = 0; j < L; ++j) sum += fv[j] * dgv[j];
  return sum * (kTwoPi / L) / (kTwoPi * kI);
}

cplx berger_shaw_coefficients(const symbols::FourierSymbol& f, const symbols::FourierSymbol& g) {
  cplx sum = 0.0;
  for (const auto& [n, c] : f.coeffs()) sum += -static_cast<double>(n) * c * g.coeff(-n);
  return sum;
}

BergerShaw berger_shaw(const symbols::FourierSymbol& f, const symbols::FourierSymbol& g,
                       std::optional<int> N, std::optional<int> M) {
  const int bw = f.bandwidth() + g.bandwidth();
  const int n = N.value_or(std::max(1, bw));
  const int m = M.value_or(n + bw + 1);
  const auto Tf = sections::OperatorWord::of(sections::Factor::toeplitz(f, "T_f"));
  const auto Tg = sections::OperatorWord::of(sections::Factor::toeplitz(g, "T_g"));
  BergerShaw out;
  out.corner = sections::corner_trace(sections::commutator(Tf, Tg), n, m);
  out.trace = out.corner.value;
  out.integral = berger_shaw_integral(f, g);
  out.coefficient_sum = berger_shaw_coefficients(f, g);
  return out;
}

TorsionResult exp_torsion(const symbols::FourierSymbol& a, const symbols::FourierSymbol& b) {
  TorsionResult r;
  r.method = Method::exp;
  const cplx integral = berger_shaw_integral(a, b);
  const cplx coeff = berger_shaw_coefficients(a, b);
  r.value = std::exp(integral);
  r.err_estimate = std::abs(r.value) * std::abs(integral - coeff);
  std::ostringstream os;
  os << "Berger-Shaw integral " << integral << ", coefficient sum " << coeff;
  r.notes.push_back(os.str());
  if (a.bandwidth() + b.bandwidth() <= 64) {
    const auto bs = berger_shaw(a, b);
    std::ostringstream ct;
    ct << "corner trace " << bs.trace << " (tail " << bs.corner.tail << ")";
    r.notes.push_back(ct.str());
  }
  return r;
}

}  // namespace torsionlab::torsion
