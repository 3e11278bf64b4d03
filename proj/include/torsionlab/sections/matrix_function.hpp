#pragma once

#include "torsionlab/sections/function_spec.hpp"
#include "torsionlab/sections/operator_section.hpp"

namespace torsionlab::sections {

enum class MatrixFunctionMode { hermitian_eig, power_series, contour };

struct MatrixFunctionOptions {
  double hermitian_tol = 1e-10;  // relative
  double contour_tol = 1e-13;    // relative node-doubling stop
  int max_nodes = 4096;
};

// Upper bound on the spectral norm: min(Frobenius, sqrt(|A|_1 |A|_inf)).
double spectral_norm_estimate(const Matrix& A);

Matrix matrix_function(const Matrix& A, const FunctionSpec& f, MatrixFunctionMode mode,
                       const MatrixFunctionOptions& opts = {});
OperatorSection matrix_function(const OperatorSection& sec, const FunctionSpec& f,
                                MatrixFunctionMode mode, const MatrixFunctionOptions& opts = {});

// hermitian_eig for hermitian input and smooth_real specs, power_series for
// entire series, contour otherwise.
MatrixFunctionMode default_mode(const Matrix& A, const FunctionSpec& f);

}  // namespace torsionlab::sections
