#pragma once

// Reference computations for the tests. Each one is written directly from a
// definition (a Riemann sum, a dense matrix, a power series) and shares no
// code with the library beyond the Eigen types.

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Coeffs = std::map<int, cplx>;

inline constexpr double pi = 3.14159265358979323846;

// c_n = (1/L) sum_j f(theta_j) e^{-i n theta_j}, a direct O(L) sum per index.
inline cplx fourier_coefficient(const std::function<cplx(double)>& f, int n, int L = 2048) {
  cplx s = 0.0;
  for (int j = 0; j < L; ++j) {
    const double th = 2.0 * pi * j / L;
    s += f(th) * std::polar(1.0, -n * th);
  }
  return s / static_cast<double>(L);
}

inline cplx eval(const Coeffs& c, double theta) {
  cplx s = 0.0;
  for (const auto& [n, v] : c) s += v * std::polar(1.0, n * theta);
  return s;
}

inline Coeffs convolve(const Coeffs& a, const Coeffs& b) {
  Coeffs out;
  for (const auto& [n, x] : a)
    for (const auto& [m, y] : b) out[n + m] += x * y;
  return out;
}

inline cplx coeff(const Coeffs& c, int n) {
  const auto it = c.find(n);
  return it == c.end() ? cplx(0.0) : it->second;
}

// (j, k) entry c_{j-k}.
inline Mat toeplitz(const Coeffs& c, int N) {
  Mat T = Mat::Zero(N, N);
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) T(j, k) = coeff(c, j - k);
  return T;
}

// Modified Bessel function I_n(x) from its power series.
inline double bessel_i(int n, double x) {
  n = std::abs(n);
  double term = std::pow(x / 2.0, n) / std::tgamma(n + 1.0);
  double sum = term;
  for (int k = 1; k < 60; ++k) {
    term *= (x / 2.0) * (x / 2.0) / (k * static_cast<double>(k + n));
    sum += term;
  }
  return sum;
}

// sum |n| |c_n|^2, the squared Hilbert-Schmidt norm of [phi, P].
inline double hankel_hs_squared(const Coeffs& c) {
  double s = 0.0;
  for (const auto& [n, v] : c) s += std::abs(n) * std::norm(v);
  return s;
}

// (1/2 pi i) int f dg as a Riemann sum with g' from the coefficients.
inline cplx pairing_integral(const Coeffs& f, const Coeffs& g, int L = 4096) {
  cplx s = 0.0;
  for (int j = 0; j < L; ++j) {
    const double th = 2.0 * pi * j / L;
    cplx dg = 0.0;
    for (const auto& [n, v] : g) dg += cplx(0.0, n) * v * std::polar(1.0, n * th);
    s += eval(f, th) * dg;
  }
  return s / (static_cast<double>(L) * cplx(0.0, 1.0));
}

// Winding number by summing principal argument increments.
inline int winding(const std::function<cplx(double)>& f, int L = 4096) {
  double total = 0.0;
  cplx prev = f(0.0);
  for (int j = 1; j <= L; ++j) {
    const cplx cur = f(2.0 * pi * j / L);
    total += std::arg(cur / prev);
    prev = cur;
  }
  return static_cast<int>(std::lround(total / (2.0 * pi)));
}

// Trace norm from a dense SVD.
inline double trace_norm(const Mat& A) {
  return Eigen::JacobiSVD<Mat>(A).singularValues().sum();
}

inline double schatten(const Mat& A, double p) {
  const Eigen::VectorXd s = Eigen::JacobiSVD<Mat>(A).singularValues();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) sum += std::pow(s(i), p);
  return std::pow(sum, 1.0 / p);
}

// exp of a matrix by a long Taylor series after scaling, for small inputs.
inline Mat expm(const Mat& A) {
  const double nrm = A.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (nrm / std::pow(2.0, squarings) > 0.25) ++squarings;
  const Mat B = A / std::pow(2.0, squarings);
  Mat term = Mat::Identity(A.rows(), A.cols()), sum = term;
  for (int k = 1; k < 30; ++k) {
    term = term * B / static_cast<double>(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

// Determinant of the leading N x N corner of A B A^-1 B^-1 built from M x M
// Toeplitz matrices (the full M x M product always has determinant 1).
inline cplx multiplicative_commutator_det(const Coeffs& a, const Coeffs& b, int N, int M) {
  const Mat A = toeplitz(a, M), B = toeplitz(b, M);
  const Mat W = A * B * A.inverse() * B.inverse();
  return W.topLeftCorner(N, N).determinant();
}

}  // namespace oracle
