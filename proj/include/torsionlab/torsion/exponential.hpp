#pragma once

#include <optional>

#include "torsionlab/sections/determinant.hpp"
#include "torsionlab/symbols/fourier_symbol.hpp"
#include "torsionlab/torsion/result.hpp"

namespace torsionlab::torsion {

// (1/2 pi i) int f dg by the trapezoid rule on a grid that resolves f g'
// exactly for Laurent polynomials.
cplx berger_shaw_integral(const symbols::FourierSymbol& f, const symbols::FourierSymbol& g);
// The same pairing in coefficient form: sum_n (-n) c_n(f) c_{-n}(g).
cplx berger_shaw_coefficients(const symbols::FourierSymbol& f, const symbols::FourierSymbol& g);

struct BergerShaw {
  cplx trace = 0.0;
  cplx integral = 0.0;
  cplx coefficient_sum = 0.0;
  sections::CornerTrace corner;
};

// Corner trace of [T_f, T_g] with N = combined bandwidth (at least 1) and
// M = N + combined bandwidth + 1 unless given.
BergerShaw berger_shaw(const symbols::FourierSymbol& f, const symbols::FourierSymbol& g,
                       std::optional<int> N = std::nullopt, std::optional<int> M = std::nullopt);

// tau(e^{T_a}, e^{T_b}) = exp((1/2 pi i) int a db). For banded symbols with
// combined bandwidth up to 64 the corner trace is recorded as a cross-check.
TorsionResult exp_torsion(const symbols::FourierSymbol& a, const symbols::FourierSymbol& b);

}  // namespace torsionlab::torsion
