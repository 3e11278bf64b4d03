#include "torsionlab/sections/stabilize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "torsionlab/errors.hpp"
#include "torsionlab/sections/toeplitz.hpp"
#include "torsionlab/symbols/argument.hpp"

namespace torsionlab::sections {

namespace {

// Kernel and cokernel bases of one diagonal block, embedded in dimension 3M.
struct BlockNullity {
  Matrix kernel;
  Matrix cokernel;
};

void append_cols(Matrix& dst, const Matrix& src) {
  if (src.cols() == 0) return;
  Matrix out(src.rows(), dst.cols() + src.cols());
  if (dst.cols() > 0) out.leftCols(dst.cols()) = dst;
  out.rightCols(src.cols()) = src;
  dst = std::move(out);
}

// Shift T_{z^j} at dimension M has exact kernel/cokernel made of unit vectors.
BlockNullity shift_nullity(int j, int M, int offset, int total) {
  BlockNullity n{Matrix::Zero(total, 0), Matrix::Zero(total, 0)};
  const int k = std::min(std::abs(j), M);
  Matrix top = Matrix::Zero(total, k), bottom = Matrix::Zero(total, k);
  for (int i = 0; i < k; ++i) {
    top(offset + i, i) = 1.0;
    bottom(offset + M - k + i, i) = 1.0;
  }
  if (j > 0) {  // lower shift: kills the bottom, misses the top
    n.kernel = bottom;
    n.cokernel = top;
  } else if (j < 0) {
    n.kernel = top;
    n.cokernel = bottom;
  }
  return n;
}

BlockNullity dense_nullity(const Matrix& X, int index, int offset, int total, const StabilizeOptions& opts) {
  const int M = static_cast<int>(X.rows());
  Eigen::BDCSVD<Matrix> svd(X, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cut = opts.sigma_thresh * (s.size() ? s(0) : 0.0);
  int small = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) small += s(i) < cut;
  const int k = std::min(M, std::max(std::abs(index), small));
  BlockNullity n{Matrix::Zero(total, k), Matrix::Zero(total, k)};
  if (k > 0) {
    n.kernel.block(offset, 0, M, k) = svd.matrixV().rightCols(k);
    n.cokernel.block(offset, 0, M, k) = svd.matrixU().rightCols(k);
  }
  return n;
}

// Splits an orthonormal basis into vectors concentrated in the top halves of
// the blocks and the rest.
std::pair<Matrix, Matrix> split_top_bottom(const Matrix& basis, int M) {
  const auto total = basis.rows();
  if (basis.cols() == 0) return {Matrix::Zero(total, 0), Matrix::Zero(total, 0)};
  Matrix Ptop = Matrix::Zero(basis.cols(), basis.cols());
  for (int blk = 0; blk < 3; ++blk) {
    const auto rows = basis.block(blk * M, 0, M / 2, basis.cols());
    Ptop += rows.adjoint() * rows;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(Ptop);
  Matrix top = Matrix::Zero(total, 0), bottom = Matrix::Zero(total, 0);
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const Matrix v = basis * es.eigenvectors().col(i);
    append_cols(es.eigenvalues()(i) > 0.5 ? top : bottom, v);
  }
  return {top, bottom};
}

struct Lift {
  Matrix matrix;
  int rank = 0;
  double min_sigma = 0.0;
  std::shared_ptr<const LiftSolver> lu;
};

// blocks: the three diagonal blocks; index per block (0 for identity blocks,
// which contribute nothing). dense marks the block needing an SVD.
Lift lift(const Matrix& X, int index_x, int shift_power, int shift_slot, int M, const std::string& name,
          const StabilizeOptions& opts) {
  const int total = 3 * M;
  Matrix T = Matrix::Identity(total, total);
  T.topLeftCorner(M, M) = X;
  T.block(shift_slot * M, shift_slot * M, M, M) =
      toeplitz_matrix(symbols::FourierSymbol::monomial(shift_power), M);

  Matrix K = Matrix::Zero(total, 0), C = Matrix::Zero(total, 0);
  const BlockNullity dn = dense_nullity(X, index_x, 0, total, opts);
  const BlockNullity sn = shift_nullity(shift_power, M, shift_slot * M, total);
  append_cols(K, dn.kernel);
  append_cols(K, sn.kernel);
  append_cols(C, dn.cokernel);
  append_cols(C, sn.cokernel);

  auto [k_top, k_bot] = split_top_bottom(K, M);
  auto [c_top, c_bot] = split_top_bottom(C, M);
  if (k_top.cols() != c_top.cols() || k_bot.cols() != c_bot.cols()) {
    throw NumericalError("kernel/cokernel dimension mismatch stabilizing " + name + ": kernel " +
                         std::to_string(k_top.cols()) + "+" + std::to_string(k_bot.cols()) + ", cokernel " +
                         std::to_string(c_top.cols()) + "+" + std::to_string(c_bot.cols()));
  }
  if (k_top.cols() > 0) T += c_top * k_top.adjoint();
  if (k_bot.cols() > 0) T += c_bot * k_bot.adjoint();

  Lift out;
  out.rank = static_cast<int>(k_top.cols());
  auto lu = std::make_shared<const LiftSolver>(T, opts.sigma_ok);
  out.min_sigma = lu->min_sigma();
  if (!(out.min_sigma > opts.sigma_ok)) {
    throw NumericalError("stabilization of " + name + " failed: minimum singular value estimate " +
                         std::to_string(out.min_sigma) + " below " + std::to_string(opts.sigma_ok));
  }
  out.lu = std::move(lu);
  out.matrix = std::move(T);
  return out;
}

}  // namespace

LiftSolver::LiftSolver(const Matrix& T, double sigma_ok) {
  const double norm1 = T.cwiseAbs().colwise().sum().maxCoeff();
  partial_.emplace(T);
  const Vector probe = Vector::Ones(T.rows());
  const Vector x = partial_->solve(probe);
  const double residual = (T * x - probe).norm() / (norm1 * x.norm() + probe.norm());
  min_sigma_ = partial_->rcond() * norm1;
  if (residual < 1e-12 && min_sigma_ > sigma_ok) return;
  partial_.reset();
  qr_.emplace(T);
  min_sigma_ = Eigen::internal::rcond_estimate_helper(norm1, *qr_) * norm1;
}

Matrix LiftSolver::solve(const Matrix& rhs) const {
  return qr_ ? Matrix(qr_->solve(rhs)) : Matrix(partial_->solve(rhs));
}

int factor_index(const Factor& f) {
  const auto& s = f.operand.symbol;
  int ind;
  if (!f.function) {
    ind = symbols::numerical_index(s);
  } else {
    const FunctionSpec& fn = *f.function;
    ind = -symbols::winding_number([&](double th) { return fn(s(th)); },
                                   symbols::winding_grid(s.bandwidth()));
  }
  return f.inverse ? -ind : ind;
}

StabilizedPair stabilize(const Factor& a, const Factor& b, int M, const StabilizeOptions& opts) {
  const int ind_a = factor_index(a);
  const int ind_b = factor_index(b);
  // T_{z^{ind}} has index -ind, opposite to the factor.
  Lift la = lift(a.evaluate(M), ind_a, ind_a, 1, M, a.label(), opts);
  Lift lb = lift(b.evaluate(M), ind_b, ind_b, 2, M, b.label(), opts);
  StabilizedPair out;
  out.block_dim = M;
  out.a_tilde = {std::move(la.matrix), 0, a.label() + " (+) S (+) I + F"};
  out.b_tilde = {std::move(lb.matrix), 0, b.label() + " (+) I (+) S + F"};
  out.f_rank_a = la.rank;
  out.f_rank_b = lb.rank;
  out.min_sigma_a = la.min_sigma;
  out.min_sigma_b = lb.min_sigma;
  out.lu_a = std::move(la.lu);
  out.lu_b = std::move(lb.lu);
  return out;
}

StabilizedPair stabilize(const symbols::FourierSymbol& a, const symbols::FourierSymbol& b, int M,
                         const StabilizeOptions& opts) {
  return stabilize(Factor::toeplitz(a, "T_a"), Factor::toeplitz(b, "T_b"), M, opts);
}

}  // namespace torsionlab::sections
