#include "torsionlab/torsion/special.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "torsionlab/errors.hpp"
#include "torsionlab/sections/determinant.hpp"
#include "torsionlab/sections/toeplitz.hpp"
#include "torsionlab/symbols/argument.hpp"
#include "torsionlab/symbols/rational_symbol.hpp"
#include "torsionlab/torsion/tame.hpp"

namespace torsionlab::torsion {

using sections::Factor;
using sections::FunctionSpec;
using sections::MatrixFunctionMode;
using sections::OperatorWord;

PhaseResult positive_pair_phase(const symbols::FourierSymbol& a, const symbols::FourierSymbol& b,
                                const std::vector<int>& dims) {
  for (const auto* s : {&a, &b}) {
    if (!s->is_real()) throw DomainError("positive pair phase needs real symbols");
    const int M = 2 * dims.back();
    Eigen::SelfAdjointEigenSolver<Matrix> es(sections::toeplitz_matrix(*s, M), Eigen::EigenvaluesOnly);
    if (!(es.eigenvalues().minCoeff() > 1e-8)) throw DomainError("section is not positive definite");
  }
  const auto log = FunctionSpec::log();
  const auto la = OperatorWord::of(Factor::toeplitz(a, "T_a").with_function(log, MatrixFunctionMode::hermitian_eig));
  const auto lb = OperatorWord::of(Factor::toeplitz(b, "T_b").with_function(log, MatrixFunctionMode::hermitian_eig));
  const auto word = sections::commutator(la, lb);
  PhaseResult out;
  double prev = 0.0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const int N = dims[k];
    const auto ct = sections::corner_trace(word, N, 2 * N);
    const cplx phi = -kI * ct.value;
    out.phase = phi.real();
    out.imag_residue = phi.imag();
    out.tail = ct.tail;
    out.dims.push_back(N);
    if (k > 0) out.err_estimate = std::abs(out.phase - prev);
    prev = out.phase;
  }
  return out;
}

namespace {

cplx analytic_value(const symbols::FourierSymbol& phi, cplx lambda) {
  cplx s = 0.0;
  for (const auto& [n, c] : phi.coeffs()) s += c * std::pow(lambda, n);
  return s;
}

// <k, T_phi k> / <k, k> with k the Szego kernel at lambda, on a section long
// enough that the kernel's truncation is below 1e-17.
cplx szego_quotient(const symbols::FourierSymbol& phi, cplx lambda) {
  const double r = std::abs(lambda);
  const int M = phi.bandwidth() + 2 + (r > 0 ? static_cast<int>(std::ceil(std::log(1e-17) / std::log(r))) : 0);
  Vector k(M);
  cplx p = 1.0;
  for (int j = 0; j < M; ++j, p *= std::conj(lambda)) k(j) = p;
  const Matrix T = sections::toeplitz_matrix(phi, M);
  return k.dot(T * k) / k.squaredNorm();
}

}  // namespace

TorsionResult lefschetz_torsion(const symbols::FourierSymbol& phi, const KernelSpec& spec) {
  if (std::abs(spec.lambda) >= 1.0) throw DomainError("unsupported kernel spec: |lambda| must be below 1");
  if (phi.min_frequency() < 0) throw DomainError("Lefschetz evaluation needs an analytic symbol");
  if (symbols::winding_number(phi) != 0) throw DomainError("symbol is not invertible in H-infinity");
  TorsionResult r;
  r.method = Method::lefschetz;
  std::ostringstream os;
  if (spec.kind == KernelSpec::Kind::analytic_shift) {
    r.value = analytic_value(phi, spec.lambda);
    const cplx q = szego_quotient(phi, spec.lambda);
    os << "Szego kernel quotient " << q << ", difference " << std::abs(q - r.value);
  } else {
    r.value = 1.0 / analytic_value(phi, 0.0);
    const cplx q = szego_quotient(phi, 0.0);
    os << "Szego kernel quotient at 0: 1/" << q << ", difference " << std::abs(1.0 / q - r.value);
  }
  r.notes.push_back(os.str());
  return r;
}

TorsionResult best_torsion(const symbols::FourierSymbol& f, const symbols::FourierSymbol& g,
                           const DetOptions& opts) {
  const auto rf = symbols::laurent_polynomial_as_rational(f);
  const auto rg = symbols::laurent_polynomial_as_rational(g);
  if (rf && rg && rf->circle_regular() && rg->circle_regular()) return torsion_tame(*rf, *rg);
  return torsion_det(f, g, opts);
}

FactorizationSides functional_factorization(const symbols::Polynomial& f, const symbols::FourierSymbol& a,
                                            const symbols::FourierSymbol& b, const DetOptions& opts) {
  const int grid = symbols::winding_grid(a.bandwidth());
  const auto av = a.sample(grid);
  const double scale = std::max(1.0, a.sup_norm());
  std::vector<cplx> inside;  // roots in the spectrum of T_a, with multiplicity
  std::vector<cplx> rest;
  for (const auto& root : f.roots()) {
    double dist = std::numeric_limits<double>::infinity();
    for (const auto& v : av) dist = std::min(dist, std::abs(v - root.value));
    if (dist < 1e-6 * scale) throw DomainError("polynomial has a root on the essential spectrum");
    const auto shifted = a - symbols::FourierSymbol::constant(root.value);
    auto& dst = symbols::winding_number(shifted) != 0 ? inside : rest;
    for (int k = 0; k < root.multiplicity; ++k) dst.push_back(root.value);
  }

  // f o a by Horner on symbols.
  symbols::FourierSymbol fa;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
    fa = fa * a + symbols::FourierSymbol::constant(*it);

  FactorizationSides out;
  out.lhs = best_torsion(fa, b, opts);

  TorsionResult rhs;
  rhs.method = Method::det;
  rhs.err_estimate = 0.0;
  for (const auto& lambda : inside) {
    const auto t = best_torsion(a - symbols::FourierSymbol::constant(lambda), b, opts);
    rhs.value *= t.value;
    rhs.err_estimate += t.err_estimate;
  }
  const symbols::Polynomial q = symbols::Polynomial::from_roots(rest, f.leading());
  const auto qa = Factor::toeplitz(a, "T_a").with_function(FunctionSpec::polynomial(q.coeffs()),
                                                          MatrixFunctionMode::power_series);
  const auto tq = torsion_det(qa, Factor::toeplitz(b, "T_b"), opts);
  rhs.value *= tq.value;
  rhs.err_estimate = std::abs(rhs.value) * (rhs.err_estimate + tq.err_estimate / std::abs(tq.value));
  rhs.dims = tq.dims;
  std::ostringstream os;
  os << inside.size() << " spectral roots; q(T_a) factor " << tq.value;
  rhs.notes.push_back(os.str());
  out.rhs = rhs;
  return out;
}

}  // namespace torsionlab::torsion
