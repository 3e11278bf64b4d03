#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "torsionlab/errors.hpp"
#include "torsionlab/funcalc/discrepancy.hpp"
#include "torsionlab/funcalc/index.hpp"
#include "torsionlab/funcalc/majorant.hpp"
#include "torsionlab/funcalc/perturbation.hpp"
#include "torsionlab/funcalc/trace_identity.hpp"
#include "torsionlab/symbols/polynomial.hpp"

using namespace torsionlab;
using namespace torsionlab::funcalc;
using sections::FunctionSpec;
using symbols::FourierSymbol;
using symbols::Polynomial;

namespace {

FourierSymbol Z(int n, cplx c = 1.0) { return FourierSymbol::monomial(n, c); }
FourierSymbol C(cplx c) { return FourierSymbol::constant(c); }

FourierSymbol two_cos() { return Z(1) + Z(-1); }
FunctionSpec square() { return FunctionSpec::polynomial({0.0, 0.0, 1.0}); }

}  // namespace

// ---------------------------------------------------------------- majorants

TEST_CASE("majorant second derivatives") {
  CHECK(std::abs(majorant_second_derivative(FunctionSpec::exp(), 1.0).value - std::exp(1.0)) < 1e-13);
  for (double x : {0.0, 0.5, 3.0}) {
    CHECK(majorant_second_derivative(square(), x).value == doctest::Approx(2.0));
    CHECK(majorant_second_derivative(FunctionSpec::identity(), x).value == 0.0);
  }
  CHECK(std::abs(majorant(FunctionSpec::exp(), 2.0).value - std::exp(2.0)) < 1e-12);
  // Signs do not matter: the majorant of 1 - w + w^3 at 2 is 1 + 2 + 8.
  CHECK(majorant(FunctionSpec::polynomial({1.0, -1.0, 0.0, 1.0}), 2.0).value == doctest::Approx(11.0));
}

// ---------------------------------------------------------------- composition and commutators

TEST_CASE("composing a polynomial with a symbol is exact") {
  const FourierSymbol sq = compose(square(), two_cos());
  CHECK(sq.coeffs() == (Z(2) + C(2) + Z(-2)).coeffs());
  const FourierSymbol e = compose(FunctionSpec::exp(), two_cos());
  for (int n = 0; n <= 5; ++n) CHECK(std::abs(e.coeff(n) - oracle::bessel_i(n, 2.0)) < 1e-14);
}

TEST_CASE("commutator Schatten norms") {
  CHECK(std::abs(commutator_schatten(two_cos(), 2.0) - std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(commutator_schatten(two_cos(), 1.0) - 2.0) < 1e-14);
  const FourierSymbol s({{-3, 0.5}, {-1, {0.0, 0.2}}, {2, 1.0}});
  CHECK(std::abs(commutator_schatten(s, 2.0) - std::sqrt(oracle::hankel_hs_squared(s.coeffs()))) < 1e-14);
}

// ---------------------------------------------------------------- calculus discrepancy

TEST_CASE("linear functions have no discrepancy") {
  const DiscrepancyReports r = calculus_discrepancy(two_cos(), FunctionSpec::polynomial({0.5, 2.0}), 1.0);
  CHECK(r.p.measured < 1e-14);
  CHECK(r.two_p.measured < 1e-14);
  CHECK(r.p.bound == 0.0);
  CHECK(r.two_p.bound == 0.0);
  CHECK(r.p.pass);
}

TEST_CASE("squaring 2cos: measured 1 against bound 2") {
  const DiscrepancyReports r = calculus_discrepancy(two_cos(), square(), 1.0);
  // Dense oracle: T_{phi^2} - T_phi^2 on the leading 8 x 8 corner of 16 x 16
  // sections is -e0 e0*.
  const oracle::Mat T = oracle::toeplitz(two_cos().coeffs(), 16);
  const oracle::Mat D = oracle::toeplitz((Z(2) + C(2) + Z(-2)).coeffs(), 16) - T * T;
  const double trace_norm = oracle::trace_norm(D.topLeftCorner(8, 8));
  CHECK(std::abs(trace_norm - 1.0) < 1e-14);
  CHECK(std::abs(r.p.measured - trace_norm) < 1e-12);
  CHECK(std::abs(r.p.bound - 2.0) < 1e-12);
  CHECK(r.p.pass);
  // L^2: Hilbert-Schmidt norm 1 against sqrt(2) * 2 / 2 * 2.
  CHECK(std::abs(r.two_p.measured - 1.0) < 1e-12);
  CHECK(std::abs(r.two_p.bound - 2.0 * std::sqrt(2.0)) < 1e-12);
  CHECK(r.two_p.pass);
  CHECK(r.two_p.constants.count("bound_2p_divided") == 1);
}

TEST_CASE("exp of 2cos stays below e^2") {
  const DiscrepancyReports r = calculus_discrepancy(two_cos(), FunctionSpec::exp(), 1.0);
  CHECK(std::abs(r.p.bound - std::exp(2.0)) < 1e-10);
  CHECK(r.p.measured > 0.0);
  CHECK(r.p.pass);
  CHECK(r.two_p.pass);
  CHECK(r.p.dims.size() == r.p.history.size());
}

// ---------------------------------------------------------------- unitary estimate

TEST_CASE("unitary exponential estimate") {
  CHECK(exp_unitary_estimate(two_cos(), 0.0, 1.0).measured < 1e-12);
  const BoundReport at3 = exp_unitary_estimate(two_cos(), 3.0, 1.0);
  CHECK(at3.pass);
  CHECK(at3.constants.at("c1") > 0.0);
  CHECK(at3.constants.at("c2") > 0.0);
  const BoundReport at15 = exp_unitary_estimate(two_cos(), 1.5, 1.0);
  CHECK(at15.pass);
  CHECK(at15.measured <= at15.bound);
}

// ---------------------------------------------------------------- trace identity

TEST_CASE("trace identity") {
  {
    const TraceIdentity t = trace_commutator_identity(two_cos(), Z(1), FunctionSpec::identity(), {16});
    CHECK(t.gap == 0.0);
  }
  {
    const TraceIdentity t = trace_commutator_identity(Z(1), Z(-1), square(), {8});
    CHECK(t.gap < 1e-10);
    CHECK(std::abs(t.rhs) < 1e-14);
    // Dense oracle at M = 16, N = 8.
    const oracle::Mat A = oracle::toeplitz(Z(1).coeffs(), 16), B = oracle::toeplitz(Z(-1).coeffs(), 16);
    const oracle::Mat F = A * A;
    CHECK(std::abs((F * B - B * F).topLeftCorner(8, 8).trace() - t.lhs) < 1e-14);
  }
  {
    const TraceIdentity t = trace_commutator_identity(two_cos(), Z(1), FunctionSpec::exp());
    CHECK(t.gap < 1e-6);
    // The gap sits at rounding level along the whole schedule.
    for (double g : t.gap_history) CHECK(g < 1e-10);
  }
}

// ---------------------------------------------------------------- perturbations

TEST_CASE("perturbations in the trace class") {
  const FunctionSpec e = FunctionSpec::exp();
  CHECK(perturbation_schatten(two_cos(), Matrix::Zero(1, 1), e, 1.0).measured < 1e-13);

  Matrix k = Matrix::Zero(2, 2);
  k(0, 1) = k(1, 0) = 0.3;
  const BoundReport r = perturbation_schatten(C(0), k, e, 1.0);
  // 2 x 2 oracle: e^K - I has eigenvalues e^{0.3} - 1 and e^{-0.3} - 1.
  const double want = oracle::trace_norm(oracle::expm(k) - oracle::Mat::Identity(2, 2));
  CHECK(std::abs(want - 2.0 * std::sinh(0.3)) < 1e-14);
  CHECK(std::abs(r.measured - want) < 1e-12);
  CHECK(r.pass);

  Matrix e00 = Matrix::Zero(1, 1);
  e00(0, 0) = 1.0;
  const BoundReport plateau = perturbation_schatten(two_cos(), e00, e, 1.0);
  CHECK(plateau.pass);
  CHECK(plateau.constants.at("plateau") == 1.0);
}

// ---------------------------------------------------------------- index

TEST_CASE("index of compositions") {
  const auto check = [](const Polynomial& f, int want) {
    const IndexComparison c = index_of_composition(f, Z(1));
    CHECK(c.computed == want);
    CHECK(c.formula == want);
  };
  check(Polynomial::from_roots({0.0, 0.0}), -2);
  check(Polynomial::from_roots({2.0}), 0);
  check(Polynomial::from_roots({0.0, 0.5, 3.0}), -2);
  const IndexComparison c = index_of_composition(Polynomial::from_roots({0.2, 3.0}), Z(-1) + C(0.1));
  CHECK(c.computed == c.formula);
  CHECK_THROWS_AS(index_of_composition(Polynomial::from_roots({1.0}), Z(1)), DomainError);
}
