#include "torsionlab/sections/matrix_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "torsionlab/errors.hpp"

namespace torsionlab::sections {

namespace {

bool is_hermitian(const Matrix& A, double tol) {
  const double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
  return (A - A.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

Matrix hermitian_eig(const Matrix& A, const FunctionSpec& f, const MatrixFunctionOptions& opts) {
  if (A.size() == 0) return A;
  if (!is_hermitian(A, opts.hermitian_tol))
    throw DomainError("hermitian-eig mode on a non-hermitian section");
  const Matrix H = 0.5 * (A + A.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(H);
  const auto& lam = es.eigenvalues();
  Vector fl(lam.size());
  for (Eigen::Index k = 0; k < lam.size(); ++k) {
    fl(k) = f(cplx(lam(k), 0.0));
    if (!std::isfinite(std::abs(fl(k))))
      throw DomainError("function " + f.name() + " undefined at eigenvalue " + std::to_string(lam(k)));
  }
  const Matrix& V = es.eigenvectors();
  return V * fl.asDiagonal() * V.adjoint();
}

// sum_{k < terms} c_k A^k. Long series use Paterson-Stockmeyer: powers up to
// A^q, then Horner in A^q over blocks of q coefficients.
Matrix horner(const Matrix& A, const FunctionSpec& f, int terms) {
  const auto n = A.rows();
  const Matrix I = Matrix::Identity(n, n);
  if (terms <= 4) {
    Matrix acc = f.coefficient(terms - 1) * I;
    for (int k = terms - 2; k >= 0; --k) {
      acc = A * acc;
      acc.diagonal().array() += f.coefficient(k);
    }
    return acc;
  }
  const int q = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(terms))));
  std::vector<Matrix> pw{I, A};
  for (int k = 2; k <= q; ++k) pw.push_back(pw.back() * A);
  const int blocks = (terms + q - 1) / q;
  auto block = [&](int b) {
    Matrix m = Matrix::Zero(n, n);
    for (int j = 0; j < q && b * q + j < terms; ++j) {
      const cplx c = f.coefficient(b * q + j);
      if (c != cplx(0.0)) m += c * pw[j];
    }
    return m;
  };
  Matrix acc = block(blocks - 1);
  for (int b = blocks - 2; b >= 0; --b) acc = pw[q] * acc + block(b);
  return acc;
}

Matrix power_series(const Matrix& A, const FunctionSpec& f) {
  const auto n = A.rows();
  if (n == 0) return A;
  if (f.kind() != FunctionKind::entire_series)
    throw DomainError("power-series mode needs an entire series, got " + f.name());
  if (f.is_polynomial()) {
    if (*f.degree() < 0) return Matrix::Zero(n, n);
    return horner(A, f, *f.degree() + 1);
  }
  const double norm = spectral_norm_estimate(A);
  if (f.is_exponential()) {
    int s = norm > 0.5 ? static_cast<int>(std::ceil(std::log2(norm / 0.5))) : 0;
    const Matrix B = A / std::ldexp(1.0, s);
    Matrix E = horner(B, f, f.terms_for_radius(norm / std::ldexp(1.0, s), 1e-17));
    for (int k = 0; k < s; ++k) E = E * E;
    return E;
  }
  return horner(A, f, f.terms_for_radius(norm, 1e-17));
}

Matrix contour(const Matrix& A, const FunctionSpec& f, const MatrixFunctionOptions& opts) {
  const auto n = A.rows();
  if (n == 0) return A;
  double R = f.contour_radius();
  if (R > 0.0) {
    Eigen::ComplexEigenSolver<Matrix> es(A, false);
    const double rho = es.eigenvalues().cwiseAbs().maxCoeff();
    if (rho >= R) {
      throw DomainError("contour of radius " + std::to_string(R) +
                        " does not enclose the spectrum (spectral radius " + std::to_string(rho) + ")");
    }
  } else {
    R = std::max(1.25 * spectral_norm_estimate(A), 1e-3);
  }
  const Matrix I = Matrix::Identity(n, n);
  auto node_sum = [&](int nodes, int start, int stride) {
    Matrix S = Matrix::Zero(n, n);
    for (int j = start; j < nodes; j += stride) {
      const cplx lam = std::polar(R, kTwoPi * j / nodes);
      S += (f(lam) * lam) * (lam * I - A).partialPivLu().inverse();
    }
    return S;
  };
  int nodes = 16;
  Matrix sum = node_sum(nodes, 0, 1);
  Matrix F = sum / static_cast<double>(nodes);
  while (nodes < opts.max_nodes) {
    sum += node_sum(2 * nodes, 1, 2);
    nodes *= 2;
    Matrix next = sum / static_cast<double>(nodes);
    const double change = (next - F).norm();
    F = std::move(next);
    if (change <= opts.contour_tol * std::max(F.norm(), 1e-300)) return F;
  }
  throw NumericalError("contour quadrature for " + f.name() + " did not converge with " +
                       std::to_string(nodes) + " nodes");
}

}  // namespace

double spectral_norm_estimate(const Matrix& A) {
  if (A.size() == 0) return 0.0;
  const double one = A.cwiseAbs().colwise().sum().maxCoeff();
  const double inf = A.cwiseAbs().rowwise().sum().maxCoeff();
  return std::min(A.norm(), std::sqrt(one * inf));
}

MatrixFunctionMode default_mode(const Matrix& A, const FunctionSpec& f) {
  if (f.kind() == FunctionKind::smooth_real) return MatrixFunctionMode::hermitian_eig;
  if (f.kind() == FunctionKind::holomorphic_contour) return MatrixFunctionMode::contour;
  if (!f.is_polynomial() && is_hermitian(A, 1e-12)) return MatrixFunctionMode::hermitian_eig;
  return MatrixFunctionMode::power_series;
}

Matrix matrix_function(const Matrix& A, const FunctionSpec& f, MatrixFunctionMode mode,
                       const MatrixFunctionOptions& opts) {
  switch (mode) {
    case MatrixFunctionMode::hermitian_eig:
      return hermitian_eig(A, f, opts);
    case MatrixFunctionMode::power_series:
      return power_series(A, f);
    case MatrixFunctionMode::contour:
      return contour(A, f, opts);
  }
  return A;
}

OperatorSection matrix_function(const OperatorSection& sec, const FunctionSpec& f,
                                MatrixFunctionMode mode, const MatrixFunctionOptions& opts) {
  return {matrix_function(sec.entries, f, mode, opts), sec.pad_used, f.name() + "(" + sec.provenance + ")"};
}

}  // namespace torsionlab::sections
