#include "torsionlab/torsion/det.hpp"

#include <string>

#include "torsionlab/errors.hpp"

namespace torsionlab::torsion {

using sections::Factor;

cplx stabilized_commutator_det(const Factor& a, const Factor& b, int N, int pad,
                               const sections::StabilizeOptions& opts) {
  const int M = N + pad;
  const auto sp = sections::stabilize(a, b, M, opts);
  // Rows/columns kept: the leading N indices of each block.
  Matrix Rt = Matrix::Zero(3 * M, 3 * N);
  for (int blk = 0; blk < 3; ++blk)
    for (int j = 0; j < N; ++j) Rt(blk * M + j, blk * N + j) = 1.0;
  Matrix Y = sp.lu_b->solve(Rt);
  Y = sp.lu_a->solve(Y);
  Y = sp.b_tilde.entries * Y;
  Matrix RA(3 * N, 3 * M);
  for (int blk = 0; blk < 3; ++blk) RA.middleRows(blk * N, N) = sp.a_tilde.entries.middleRows(blk * M, N);
  return sections::determinant(RA * Y);
}

TorsionResult torsion_det(const Factor& a, const Factor& b, const DetOptions& opts) {
  TorsionResult r;
  r.method = Method::det;
  const int ind_a = sections::factor_index(a);
  const int ind_b = sections::factor_index(b);
  sections::FredholmDet fd;
  bool plain = ind_a == 0 && ind_b == 0 && !opts.force_stabilized;
  if (plain) {
    try {
      const auto word = sections::OperatorWord::product({a, b, a.inverted(), b.inverted()});
      sections::DetSchedule sched = opts.schedule;
      if (opts.pad) sched.pad = opts.pad;
      fd = sections::fredholm_det(word, sched);
      r.notes.push_back("plain sections (both indices 0)");
    } catch (const NumericalError& e) {
      r.notes.push_back(std::string("plain path failed, stabilizing: ") + e.what());
      plain = false;
    }
  }
  if (!plain) {
    fd = sections::run_det_schedule(
        [&](int N) { return stabilized_commutator_det(a, b, N, opts.pad.value_or(std::max(N, 8)), opts.stabilize); },
        opts.schedule);
    r.notes.push_back("stabilized (ind " + std::to_string(ind_a) + ", " + std::to_string(ind_b) + ")");
  }
  r.value = fd.value;
  r.err_estimate = fd.err_estimate;
  r.dims = fd.dims;
  r.history = fd.history;
  if (!fd.converged) r.notes.push_back("schedule did not reach the relative convergence tolerance");
  return r;
}

TorsionResult torsion_det(const symbols::FourierSymbol& f, const symbols::FourierSymbol& g,
                          const DetOptions& opts) {
  return torsion_det(Factor::toeplitz(f, "T_f"), Factor::toeplitz(g, "T_g"), opts);
}

}  // namespace torsionlab::torsion
