#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "torsionlab/errors.hpp"
#include "torsionlab/sections/determinant.hpp"
#include "torsionlab/sections/matrix_function.hpp"
#include "torsionlab/sections/schatten.hpp"
#include "torsionlab/sections/stabilize.hpp"
#include "torsionlab/sections/toeplitz.hpp"
#include "torsionlab/sections/word.hpp"
#include "torsionlab/symbols/fourier_symbol.hpp"

using namespace torsionlab;
using namespace torsionlab::sections;
using symbols::FourierSymbol;

namespace {

FourierSymbol Z(int n, cplx c = 1.0) { return FourierSymbol::monomial(n, c); }
FourierSymbol C(cplx c) { return FourierSymbol::constant(c); }

double max_abs(const Matrix& A) { return A.size() ? A.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

// ---------------------------------------------------------------- Toeplitz sections

TEST_CASE("Toeplitz sections of small symbols") {
  Matrix shift = Matrix::Zero(3, 3);
  shift(1, 0) = shift(2, 1) = 1.0;
  CHECK(max_abs(toeplitz_matrix(Z(1), 3) - shift) == 0.0);
  CHECK(max_abs(toeplitz_matrix(Z(-1), 3) - shift.transpose()) == 0.0);
  Matrix want(2, 2);
  want << 2.0, 1.0, 1.0, 2.0;
  CHECK(max_abs(toeplitz_matrix(C(2) + Z(1) + Z(-1), 2) - want) == 0.0);
}

TEST_CASE("Toeplitz section matches the entry formula") {
  const FourierSymbol s({{-3, {0.1, 0.2}}, {-1, 0.4}, {0, 1.0}, {2, {0.0, -0.5}}});
  CHECK(max_abs(toeplitz_matrix(s, 7) - oracle::toeplitz(s.coeffs(), 7)) == 0.0);
}

TEST_CASE("Hankel blocks") {
  {
    const HankelBlocks h = hankel_blocks(Z(1) + Z(-1), 2);
    CHECK(h.exact);
    CHECK(std::abs(h.lower.entries.cwiseAbs().sum() - 1.0) < 1e-15);
    CHECK(std::abs(h.upper.entries.cwiseAbs().sum() - 1.0) < 1e-15);
    CHECK(std::abs(h.hilbert_schmidt() - std::sqrt(2.0)) < 1e-15);
  }
  {
    const HankelBlocks h = hankel_blocks(C(4), 3);
    CHECK(max_abs(h.lower.entries) == 0.0);
    CHECK(max_abs(h.upper.entries) == 0.0);
  }
  {
    const HankelBlocks h = hankel_blocks(Z(3), 4);
    CHECK(std::abs(h.upper.entries.norm() - std::sqrt(3.0)) < 1e-15);
    CHECK(max_abs(h.lower.entries) == 0.0);
  }
}

TEST_CASE("Hankel Hilbert-Schmidt norm is the half Sobolev seminorm") {
  const FourierSymbol s({{-5, 0.3}, {-2, {0.0, 1.0}}, {1, {0.5, 0.5}}, {4, -0.2}});
  const HankelBlocks h = hankel_blocks(s, 8);
  CHECK(std::abs(h.hilbert_schmidt() - std::sqrt(oracle::hankel_hs_squared(s.coeffs()))) < 1e-14);
}

// ---------------------------------------------------------------- Schatten norms

TEST_CASE("Schatten norms") {
  Matrix proj = Matrix::Zero(4, 4);
  proj(1, 1) = 1.0;
  for (double p : {1.0, 1.5, 2.0, 4.0}) CHECK(std::abs(schatten_norm(proj, p) - 1.0) < 1e-15);
  CHECK(schatten_norm(Matrix::Zero(3, 3), 1.0) == 0.0);
  const Matrix A = Matrix::Random(6, 6);
  for (double p : {1.0, 2.0, 3.0}) CHECK(std::abs(schatten_norm(A, p) - oracle::schatten(A, p)) < 1e-12);
  CHECK(std::abs(schatten_norm(A, 2.0) - A.norm()) < 1e-12);
}

TEST_CASE("Schatten estimate convergence flag") {
  OperatorSection sec{Matrix::Identity(2, 2), 0, "I"};
  const SchattenEstimate first = schatten_norm(sec, 1.0);
  CHECK(!first.converged);
  const SchattenEstimate second = schatten_norm(sec, 1.0, {2.0});
  CHECK(second.converged);
  CHECK(second.value == doctest::Approx(2.0));
}

// ---------------------------------------------------------------- words and corners

TEST_CASE("padded composition of T_z T_zbar") {
  const OperatorWord w = OperatorWord::product({Factor::toeplitz(Z(1)), Factor::toeplitz(Z(-1))});
  const OperatorSection sec = compose_padded(w, 3, 1);
  Matrix want = Matrix::Identity(3, 3);
  want(0, 0) = 0.0;
  CHECK(max_abs(sec.entries - want) < 1e-15);
  CHECK(max_abs(compose_padded(OperatorWord::identity(), 4, 0).entries - Matrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("inverted factor is the inverse of the padded section") {
  const Factor f = Factor::toeplitz(C(2) + Z(1));
  const OperatorSection sec = compose_padded(OperatorWord::of(f.inverted()), 6, 40);
  // 1/(2+z) is analytic, so the true inverse is its Toeplitz operator.
  oracle::Coeffs inv;
  for (int n = 0; n < 60; ++n) inv[n] = std::pow(-1.0, n) * std::pow(2.0, -n - 1);
  CHECK(max_abs(sec.entries - oracle::toeplitz(inv, 6)) < 1e-14);
}

TEST_CASE("padded corner is pad independent on the exactness plateau") {
  const FourierSymbol a({{-2, 0.5}, {0, 1.0}, {1, 0.3}}), b({{-1, {0.0, 1.0}}, {2, 0.2}});
  const OperatorWord w = commutator(OperatorWord::of(Factor::toeplitz(a)), OperatorWord::of(Factor::toeplitz(b)));
  const int plateau = 2 * 3;  // word length times combined bandwidth
  const Matrix ref = compose_padded(w, 5, plateau).entries;
  for (int pad : {plateau + 1, plateau + 7}) CHECK(max_abs(compose_padded(w, 5, pad).entries - ref) < 1e-14);
}

TEST_CASE("corner traces of commutators") {
  const auto comm = [](const FourierSymbol& f, const FourierSymbol& g) {
    return commutator(OperatorWord::of(Factor::toeplitz(f)), OperatorWord::of(Factor::toeplitz(g)));
  };
  {
    const CornerTrace t = corner_trace(comm(Z(1), Z(-1)), 4, 8);
    CHECK(std::abs(t.value + 1.0) < 1e-15);
    CHECK(t.converged);
  }
  {
    const FourierSymbol f({{-1, 0.3}, {2, 1.0}});
    CHECK(std::abs(corner_trace(comm(f, f), 4, 8).value) < 1e-15);
  }
  {
    const CornerTrace t = corner_trace(comm(Z(2), Z(-2)), 4, 8);
    CHECK(std::abs(t.value + 2.0) < 1e-14);
    // Dense oracle at M = 8.
    const Matrix A = oracle::toeplitz(Z(2).coeffs(), 8), B = oracle::toeplitz(Z(-2).coeffs(), 8);
    const Matrix K = A * B - B * A;
    CHECK(std::abs(K.topLeftCorner(4, 4).trace() - t.value) < 1e-15);
  }
}

// ---------------------------------------------------------------- determinants

TEST_CASE("determinant agrees with Eigen") {
  const Matrix A = Matrix::Random(7, 7);
  CHECK(std::abs(determinant(A) - A.fullPivLu().determinant()) < 1e-12 * std::abs(A.determinant()) + 1e-14);
}

TEST_CASE("Fredholm determinants of simple words") {
  CHECK(std::abs(fredholm_det(OperatorWord::identity()).value - 1.0) < 1e-15);
  Factor rank_one = Factor::toeplitz(C(1), "I+e0e0*");
  rank_one.operand.corner = Matrix::Identity(1, 1);
  const FredholmDet d = fredholm_det(OperatorWord::of(rank_one));
  for (cplx v : d.history) CHECK(std::abs(v - 2.0) < 1e-14);
}

TEST_CASE("Fredholm determinant of the exponential commutator") {
  const FourierSymbol ez = symbols::exp(Z(1)), ezb = symbols::exp(Z(-1));
  const Factor a = Factor::toeplitz(ez, "T_a"), b = Factor::toeplitz(ezb, "T_b");
  DetSchedule sched;
  sched.dims = {32, 64, 128};
  const FredholmDet d = fredholm_det(OperatorWord::product({a, b, a.inverted(), b.inverted()}), sched);
  CHECK(std::abs(d.value - std::exp(-1.0)) < 1e-8);
  CHECK(d.converged);
  // Independent dense evaluation of the same corner.
  const cplx o = oracle::multiplicative_commutator_det(ez.coeffs(), ezb.coeffs(), 32, 64);
  CHECK(std::abs(o - std::exp(-1.0)) < 1e-8);
}

TEST_CASE("diverging schedules throw") {
  DetSchedule sched;
  sched.dims = {1, 2, 3, 4};
  CHECK_THROWS_AS(run_det_schedule([](int N) { return cplx(N * N); }, sched), NumericalError);
}

// ---------------------------------------------------------------- matrix functions

TEST_CASE("matrix functions on trivial inputs") {
  const Matrix A = toeplitz_matrix(C(0.3) + Z(1, 0.2) + Z(-1, 0.2), 5);
  for (auto mode : {MatrixFunctionMode::hermitian_eig, MatrixFunctionMode::power_series, MatrixFunctionMode::contour})
    CHECK(max_abs(matrix_function(A, FunctionSpec::identity(), mode) - A) < 1e-12);
  CHECK(max_abs(matrix_function(Matrix::Zero(4, 4), FunctionSpec::exp(), MatrixFunctionMode::power_series) -
                Matrix::Identity(4, 4)) < 1e-15);
}

TEST_CASE("exp agrees across modes and with a Taylor oracle") {
  const Matrix A = toeplitz_matrix(Z(1) + Z(-1) + Z(2, 0.5) + Z(-2, 0.5), 12);
  const Matrix want = oracle::expm(A);
  for (auto mode : {MatrixFunctionMode::hermitian_eig, MatrixFunctionMode::power_series, MatrixFunctionMode::contour})
    CHECK(max_abs(matrix_function(A, FunctionSpec::exp(), mode) - want) < 1e-11);
  const Matrix N = toeplitz_matrix(Z(1, cplx(0.4, 0.7)) + Z(-3, 0.9), 10);
  CHECK(max_abs(matrix_function(N, FunctionSpec::exp(), MatrixFunctionMode::power_series) - oracle::expm(N)) < 1e-12);
  CHECK(max_abs(matrix_function(N, FunctionSpec::exp(), MatrixFunctionMode::contour) - oracle::expm(N)) < 1e-11);
}

TEST_CASE("squaring the shift section is the section of z^2") {
  const Matrix S = toeplitz_matrix(Z(1), 6);
  const Matrix sq = matrix_function(S, FunctionSpec::polynomial({0.0, 0.0, 1.0}), MatrixFunctionMode::power_series);
  CHECK(max_abs(sq - toeplitz_matrix(Z(2), 6)) == 0.0);
}

TEST_CASE("real powers of a positive section") {
  const Matrix A = toeplitz_matrix(C(3) + Z(1) + Z(-1), 8);
  const Matrix half = matrix_function(A, FunctionSpec::power(0.5), MatrixFunctionMode::hermitian_eig);
  CHECK(max_abs(half * half - A) < 1e-13);
  const Matrix inv = matrix_function(A, FunctionSpec::power(-1.0), MatrixFunctionMode::hermitian_eig);
  CHECK(max_abs(inv * A - Matrix::Identity(8, 8)) < 1e-13);
  const Matrix lg = matrix_function(A, FunctionSpec::log(), MatrixFunctionMode::hermitian_eig);
  CHECK(max_abs(oracle::expm(lg) - A) < 1e-12);
}

TEST_CASE("default modes") {
  const Matrix H = toeplitz_matrix(Z(1) + Z(-1), 4);
  const Matrix N = toeplitz_matrix(Z(1), 4);
  CHECK(default_mode(N, FunctionSpec::exp()) == MatrixFunctionMode::power_series);
  CHECK(default_mode(H, FunctionSpec::power(0.5)) == MatrixFunctionMode::hermitian_eig);
}

// ---------------------------------------------------------------- stabilization

TEST_CASE("stabilization ranks") {
  CHECK(stabilize(Z(1), C(1), 8).f_rank_a == 1);
  CHECK(stabilize(C(2) + Z(1), C(1), 8).f_rank_a == 0);
  CHECK(stabilize(Z(2), C(1), 8).f_rank_a == 2);
}

TEST_CASE("stabilized lift of the shift pairs the kernel with the cokernel") {
  const int M = 6;
  const StabilizedPair sp = stabilize(Z(1), C(1), M);
  const Matrix& T = sp.a_tilde.entries;
  REQUIRE(T.rows() == 3 * M);
  // T_z (+) T_zbar (+) I has kernel e_0 of the middle block and cokernel e_0
  // of the first; the lift sends the former to the latter.
  Vector e = Vector::Zero(3 * M);
  e(M) = 1.0;
  const Vector image = T * e;
  CHECK(std::abs(std::abs(image(0)) - 1.0) < 1e-14);
  CHECK(image.norm() == doctest::Approx(1.0));
  CHECK(sp.min_sigma_a > 0.5);
}

TEST_CASE("lift solver stays accurate on graded kernels") {
  // Winding +1 with a slowly closing gap: partial pivoting loses all accuracy
  // on this lift at block size 256.
  const symbols::FourierSymbol g =
      symbols::exp(Z(1, cplx(-0.1, 0.2)) + Z(-1, cplx(0.1, 0.1)) + Z(2, 0.1)) * (Z(1) - C(cplx(-0.4, -0.6)));
  const StabilizedPair sp = stabilize(g, C(2), 256);
  const Matrix& T = sp.a_tilde.entries;
  const Matrix rhs = Matrix::Random(T.rows(), 2);
  const Matrix x = sp.lu_a->solve(rhs);
  CHECK((T * x - rhs).norm() < 1e-10 * rhs.norm());
  CHECK(sp.min_sigma_a > 1e-3);
}
