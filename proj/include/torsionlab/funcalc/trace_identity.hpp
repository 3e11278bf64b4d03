#pragma once

#include <vector>

#include "torsionlab/sections/function_spec.hpp"
#include "torsionlab/symbols/fourier_symbol.hpp"
#include "torsionlab/types.hpp"

namespace torsionlab::funcalc {

struct TraceIdentity {
  cplx lhs = 0.0;  // tr [f(T_phi), T_psi]
  cplx rhs = 0.0;  // tr f'(T_phi) [T_phi, T_psi]
  double gap = 0.0;
  std::vector<double> gap_history;
  std::vector<int> dims;
};

// Traces over the leading N diagonal entries of both sides, computed on the
// 2N sections, at each N of the schedule.
// Smooth real f needs a real phi.
TraceIdentity trace_commutator_identity(const symbols::FourierSymbol& phi, const symbols::FourierSymbol& psi,
                                        const sections::FunctionSpec& f,
                                        const std::vector<int>& schedule = {32, 64, 128, 256});

}  // namespace torsionlab::funcalc
