#include "torsionlab/funcalc/trace_identity.hpp"

#include "torsionlab/errors.hpp"
#include "torsionlab/sections/matrix_function.hpp"
#include "torsionlab/sections/toeplitz.hpp"

namespace torsionlab::funcalc {

using sections::FunctionKind;
using sections::FunctionSpec;

namespace {

// sum_{j < N} (X Y)(j, j)
cplx corner_trace_of_product(const Matrix& X, const Matrix& Y, int N) {
  cplx t = 0.0;
  for (int j = 0; j < N; ++j) t += X.row(j).transpose().cwiseProduct(Y.col(j)).sum();
  return t;
}

}  // namespace

TraceIdentity trace_commutator_identity(const symbols::FourierSymbol& phi, const symbols::FourierSymbol& psi,
                                        const FunctionSpec& f, const std::vector<int>& schedule) {
  if (f.kind() == FunctionKind::smooth_real && !phi.is_real())
    throw DomainError("smooth real function needs a real symbol");
  const FunctionSpec fp = f.derivative();
  TraceIdentity out;
  for (int N : schedule) {
    // The unpadded 2N section already resolves the leading N diagonal entries.
    const int M = 2 * N;
    const Matrix A = sections::toeplitz_matrix(phi, M);
    const Matrix B = sections::toeplitz_matrix(psi, M);
    const auto mode = sections::default_mode(A, f);
    const Matrix F = sections::matrix_function(A, f, mode);
    const Matrix Fp = f.is_exponential() ? F : sections::matrix_function(A, fp, mode);
    const Matrix C = A * B.leftCols(N) - B * A.leftCols(N);  // leading columns of [A, B]
    out.lhs = corner_trace_of_product(F, B, N) - corner_trace_of_product(B, F, N);
    out.rhs = 0.0;
    for (int j = 0; j < N; ++j) out.rhs += Fp.row(j).transpose().cwiseProduct(C.col(j)).sum();
    out.gap = std::abs(out.lhs - out.rhs);
    out.gap_history.push_back(out.gap);
    out.dims.push_back(N);
  }
  return out;
}

}  // namespace torsionlab::funcalc
