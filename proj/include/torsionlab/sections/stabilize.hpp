#pragma once

#include <memory>
#include <optional>

#include <Eigen/LU>
#include <Eigen/QR>

#include "torsionlab/sections/operator_section.hpp"
#include "torsionlab/sections/word.hpp"

namespace torsionlab::sections {

struct StabilizeOptions {
  double sigma_thresh = 1e-7;  // relative to the largest singular value
  double sigma_ok = 1e-4;
};

// Solver for a lift. Partial pivoting is tried first; when its residual on a
// probe or its condition estimate is poor the matrix is refactored with a
// Householder QR, which stays stable on lifts whose kernel vectors are
// exponentially graded (partial pivoting shows huge growth there).
class LiftSolver {
 public:
  LiftSolver(const Matrix& T, double sigma_ok);
  Matrix solve(const Matrix& rhs) const;
  // rcond times the 1-norm: a lower estimate of the smallest singular value.
  double min_sigma() const { return min_sigma_; }
  bool uses_qr() const { return qr_.has_value(); }

 private:
  std::optional<Eigen::PartialPivLU<Matrix>> partial_;
  std::optional<Eigen::HouseholderQR<Matrix>> qr_;
  double min_sigma_ = 0.0;
};

// Invertible lifts on the tripled space:
//   a_tilde = A (+) S_A (+) I + F_A,  b_tilde = B (+) I (+) S_B + F_B,
// with S_X = T_{z^{ind X}} the shift of opposite index. F pairs numerical
// kernel vectors with cokernel vectors isometrically, top-of-block vectors
// with top-of-block vectors, so the leading corner sees the correction the
// infinite operators would need.
struct StabilizedPair {
  OperatorSection a_tilde;
  OperatorSection b_tilde;
  // Rank of the top-of-block part of F, the correction the infinite
  // operators need. The bottom pairing only repairs truncation effects.
  int f_rank_a = 0;
  int f_rank_b = 0;
  int block_dim = 0;
  double min_sigma_a = 0.0;  // 1-norm condition based estimates
  double min_sigma_b = 0.0;
  std::shared_ptr<const LiftSolver> lu_a;
  std::shared_ptr<const LiftSolver> lu_b;
};

// Fredholm index of a factor: minus the winding of its (function of) symbol.
int factor_index(const Factor& f);

// Block dimension M per block; the result has dimension 3M.
StabilizedPair stabilize(const Factor& a, const Factor& b, int M, const StabilizeOptions& opts = {});
StabilizedPair stabilize(const symbols::FourierSymbol& a, const symbols::FourierSymbol& b, int M,
                         const StabilizeOptions& opts = {});

}  // namespace torsionlab::sections
