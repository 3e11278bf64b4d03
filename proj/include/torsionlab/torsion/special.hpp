#pragma once

#include <utility>
#include <vector>

#include "torsionlab/symbols/fourier_symbol.hpp"
#include "torsionlab/symbols/polynomial.hpp"
#include "torsionlab/torsion/det.hpp"
#include "torsionlab/torsion/result.hpp"

namespace torsionlab::torsion {

struct PhaseResult {
  double phase = 0.0;         // phi with tau = e^{i phi}
  double imag_residue = 0.0;  // imaginary part of -i tr[...], ideally 0
  double err_estimate = 0.0;  // change between the last two dims
  double tail = 0.0;
  std::vector<int> dims;
};

// phi(A, B) = -i tr[log T_a, log T_b] for positive real symbols, with the
// logarithms taken by hermitian eigendecomposition of the sections.
PhaseResult positive_pair_phase(const symbols::FourierSymbol& a, const symbols::FourierSymbol& b,
                                const std::vector<int>& dims = {16, 32, 64});

struct KernelSpec {
  enum class Kind { analytic_shift, coanalytic_shift } kind = Kind::analytic_shift;
  cplx lambda = 0.0;  // z - lambda, or zbar - conj(lambda)
};

// tau(T_phi, T_z - lambda) = phi(lambda) and tau(T_phi, T_zbar - conj lambda)
// = 1/phi(0) for phi invertible in H-infinity and |lambda| < 1. The notes
// record the value obtained from the explicit Szego kernel line.
TorsionResult lefschetz_torsion(const symbols::FourierSymbol& phi, const KernelSpec& spec);

struct FactorizationSides {
  TorsionResult lhs;  // tau(T_{f o a}, T_b)
  TorsionResult rhs;  // prod tau(T_{a - lambda}, T_b)^{ord} * tau(q(T_a), T_b)
};

// Throws DomainError when a root of f lies on a(S^1).
FactorizationSides functional_factorization(const symbols::Polynomial& f, const symbols::FourierSymbol& a,
                                            const symbols::FourierSymbol& b, const DetOptions& opts = {});

// tame when both symbols are Laurent polynomials, det otherwise.
TorsionResult best_torsion(const symbols::FourierSymbol& f, const symbols::FourierSymbol& g,
                           const DetOptions& opts = {});

}  // namespace torsionlab::torsion
