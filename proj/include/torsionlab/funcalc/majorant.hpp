#pragma once

#include "torsionlab/sections/function_spec.hpp"

namespace torsionlab::funcalc {

struct MajorantValue {
  double value = 0.0;
  double tail = 0.0;  // bound on the neglected part of the series
};

// ftilde(x) = sum |c_k| x^k.
MajorantValue majorant(const sections::FunctionSpec& f, double x);

// ftilde''(x) = sum k(k-1) |c_k| x^{k-2}. Throws NumericalError when the
// series does not settle.
MajorantValue majorant_second_derivative(const sections::FunctionSpec& f, double x);

}  // namespace torsionlab::funcalc
