#include "torsionlab/funcalc/discrepancy.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "torsionlab/errors.hpp"
#include "torsionlab/funcalc/majorant.hpp"
#include "torsionlab/sections/matrix_function.hpp"
#include "torsionlab/sections/schatten.hpp"
#include "torsionlab/sections/toeplitz.hpp"

namespace torsionlab::funcalc {

using sections::FunctionKind;
using sections::FunctionSpec;
using sections::MatrixFunctionMode;
using symbols::FourierSymbol;

FourierSymbol compose(const FunctionSpec& f, const FourierSymbol& phi) {
  if (f.is_polynomial()) {
    FourierSymbol out;
    const auto& c = f.polynomial_coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) out = out * phi + FourierSymbol::constant(*it);
    return out;
  }
  if (f.is_exponential()) return symbols::exp(phi);
  return FourierSymbol::from_function([&](double th) { return f(phi(th)); }, 1e-16);
}

double commutator_schatten(const FourierSymbol& phi, double q, int N) {
  const auto hb = sections::hankel_blocks(phi, std::max({N, phi.bandwidth(), 1}));
  double acc = 0.0;
  for (const auto* blk : {&hb.lower, &hb.upper}) {
    const Eigen::VectorXd s = sections::singular_values(blk->entries);
    for (Eigen::Index k = 0; k < s.size(); ++k) acc += std::pow(s(k), q);
  }
  return std::pow(acc, 1.0 / q);
}

namespace {

bool settled(double last, double prev) { return std::abs(last - prev) <= 1e-6 * std::max(1.0, last); }

std::string history_text(const std::vector<int>& dims, const std::vector<double>& h) {
  std::string s;
  for (std::size_t k = 0; k < h.size(); ++k) s += " N=" + std::to_string(dims[k]) + ":" + std::to_string(h[k]);
  return s;
}

}  // namespace

DiscrepancyReports calculus_discrepancy(const FourierSymbol& phi, const FunctionSpec& f, double p,
                                        const std::vector<int>& schedule) {
  if (f.kind() != FunctionKind::entire_series)
    throw DomainError("calculus discrepancy needs an entire series, got " + f.name());
  if (schedule.empty()) throw std::invalid_argument("empty schedule");
  const double norm = phi.sup_norm(4096);
  const auto fpp = majorant_second_derivative(f, norm);
  const double comm = commutator_schatten(phi, 2 * p, schedule.back());
  const FourierSymbol fphi = compose(f, phi);
  // Horner keeps linear f exact; the exponential of a real symbol is more
  // accurate through the hermitian eigendecomposition.
  const MatrixFunctionMode mode = (!f.is_polynomial() && phi.is_real()) ? MatrixFunctionMode::hermitian_eig
                                                                        : MatrixFunctionMode::power_series;
  const int bw = std::max(phi.bandwidth(), 1);

  DiscrepancyReports out;
  for (int N : schedule) {
    const int pad = f.is_polynomial() ? std::max(4 * std::max(*f.degree(), 1) * bw, 8) : std::max(N, 8);
    const int M = N + pad;
    const Matrix F = sections::matrix_function(sections::toeplitz_matrix(phi, M), f, mode);
    const Matrix D = (sections::toeplitz_matrix(fphi, M) - F).topLeftCorner(N, N);
    out.two_p.history.push_back(sections::schatten_norm(D, 2 * p));
    out.p.history.push_back(sections::schatten_norm(D, p));
  }
  for (auto* r : {&out.two_p, &out.p}) {
    r->dims = schedule;
    r->measured = r->history.back();
    if (r->history.size() >= 2 && !settled(r->history.back(), r->history[r->history.size() - 2]))
      throw NumericalError("discrepancy norm does not settle:" + history_text(schedule, r->history));
    r->constants["commutator_2p"] = comm;
    r->constants["sup_norm"] = norm;
    r->constants["majorant_second_derivative"] = fpp.value;
    r->constants["majorant_tail"] = fpp.tail;
    r->constants["p"] = p;
  }
  out.two_p.bound = comm * norm / 2 * fpp.value;
  out.two_p.constants["bound_2p_divided"] = norm > 0 ? comm / (2 * norm) * fpp.value : 0.0;
  out.p.bound = 0.5 * comm * comm * fpp.value;
  out.two_p.finalize();
  out.p.finalize();
  return out;
}

namespace {

// Evaluates ||e^{i s T_phi} - T_{e^{i s phi}}||_p on the N corner of an M
// section, reusing one eigendecomposition of T_phi.
struct UnitaryGap {
  const FourierSymbol& phi;
  int N;
  Eigen::SelfAdjointEigenSolver<Matrix> es;
  double p;

  UnitaryGap(const FourierSymbol& phi_, int N_, double p_)
      : phi(phi_), N(N_), es(sections::toeplitz_matrix(phi_, 2 * N_)), p(p_) {}

  double operator()(double s) const {
    if (s == 0.0) return 0.0;
    const Eigen::VectorXcd d = (kI * s * es.eigenvalues().cast<cplx>()).array().exp();
    const Matrix E = es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
    const FourierSymbol u = symbols::exp(phi * cplx(0.0, s));
    return sections::schatten_norm(E.topLeftCorner(N, N) - sections::toeplitz_matrix(u, N), p);
  }
};

// max of fn over a uniform grid on [0,1], refined once on 9 points around
// the argmax.
double grid_max(const std::function<double(double)>& fn, int grid) {
  grid = std::max(grid, 2);
  const double h = 1.0 / (grid - 1);
  double best = -1.0, arg = 0.0;
  for (int j = 0; j < grid; ++j) {
    const double s = j * h;
    const double v = fn(s);
    if (v > best) best = v, arg = s;
  }
  for (int j = -4; j <= 4; ++j) {
    const double s = arg + j * h / 4;
    if (j == 0 || s < 0 || s > 1) continue;
    best = std::max(best, fn(s));
  }
  return best;
}

}  // namespace

BoundReport exp_unitary_estimate(const FourierSymbol& phi, double t, double p, int grid,
                                 const std::vector<int>& schedule) {
  if (!phi.is_real()) throw DomainError("exp unitary estimate needs a real symbol");
  if (schedule.empty()) throw std::invalid_argument("empty schedule");
  BoundReport r;
  r.dims = schedule;
  for (int N : schedule) r.history.push_back(UnitaryGap(phi, N, p)(t));
  r.measured = r.history.back();
  if (r.history.size() >= 2 && !settled(r.history.back(), r.history[r.history.size() - 2]))
    throw NumericalError("unitary gap does not settle:" + history_text(schedule, r.history));

  const int N = schedule.back();
  const UnitaryGap gap(phi, N, p);
  const double c1 = grid_max([&](double s) { return gap(s); }, grid);
  const double c2 = grid_max(
      [&](double s) {
        const double c = commutator_schatten(symbols::exp(phi * cplx(0.0, s)), 2 * p, N);
        return c * c;
      },
      grid);
  r.bound = (std::abs(t) + 1) * (std::abs(t) + 1) * (c1 + c2);
  r.constants["c1"] = c1;
  r.constants["c2"] = c2;
  r.constants["t"] = t;
  r.constants["p"] = p;
  r.constants["grid"] = grid;
  r.finalize();
  return r;
}

}  // namespace torsionlab::funcalc
