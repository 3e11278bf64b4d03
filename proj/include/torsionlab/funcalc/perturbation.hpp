#pragma once

#include <vector>

#include "torsionlab/funcalc/bound_report.hpp"
#include "torsionlab/sections/function_spec.hpp"
#include "torsionlab/symbols/fourier_symbol.hpp"
#include "torsionlab/types.hpp"

namespace torsionlab::funcalc {

// ||f(T_a + K) - f(T_a)||_p on N x N sections along the schedule, with K a
// fixed matrix in the leading corner. measured is the last value, bound the
// plateau value; pass (constants["plateau"] = 1) when the last two entries
// agree within 1%.
BoundReport perturbation_schatten(const symbols::FourierSymbol& a, const Matrix& k, const sections::FunctionSpec& f,
                                  double p, const std::vector<int>& schedule = {16, 32, 64, 128});

}  // namespace torsionlab::funcalc
