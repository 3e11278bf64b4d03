#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "torsionlab/errors.hpp"
#include "torsionlab/symbols/argument.hpp"
#include "torsionlab/symbols/blaschke.hpp"
#include "torsionlab/symbols/fourier_symbol.hpp"
#include "torsionlab/symbols/log_split.hpp"
#include "torsionlab/symbols/polynomial.hpp"
#include "torsionlab/symbols/rational_symbol.hpp"
#include "torsionlab/symbols/smooth_symbol.hpp"

using namespace torsionlab;
using namespace torsionlab::symbols;

namespace {

FourierSymbol Z(int n, cplx c = 1.0) { return FourierSymbol::monomial(n, c); }
FourierSymbol C(cplx c) { return FourierSymbol::constant(c); }

RationalSymbol lin(cplx a) { return RationalSymbol::linear(a); }

bool has_root(const std::vector<cplx>& roots, cplx a, double tol = 1e-9) {
  for (cplx r : roots)
    if (std::abs(r - a) < tol) return true;
  return false;
}

}  // namespace

// ---------------------------------------------------------------- evaluation

TEST_CASE("symbols evaluate on the circle") {
  CHECK(std::abs(Z(1)(0.0) - 1.0) < 1e-15);
  CHECK(std::abs((Z(1) + Z(-1))(oracle::pi / 2)) < 1e-15);
  const RationalSymbol r = lin(0.5) / lin(3.0);
  CHECK(std::abs(r(0.0) - cplx(-0.25)) < 1e-15);
}

TEST_CASE("FFT sampling matches direct evaluation") {
  const FourierSymbol s({{-3, {0.2, -0.1}}, {0, 1.0}, {2, {0.0, 0.7}}, {5, 0.05}});
  const auto samples = s.sample(32, 0.3);
  for (int j = 0; j < 32; ++j) {
    const double th = 0.3 + 2.0 * oracle::pi * j / 32;
    CHECK(std::abs(samples[j] - oracle::eval(s.coeffs(), th)) < 1e-13);
  }
}

// ---------------------------------------------------------------- algebra

TEST_CASE("multiplication is convolution of coefficients") {
  const FourierSymbol a({{-2, 0.5}, {0, 1.0}, {1, {0.0, 0.3}}});
  const FourierSymbol b({{-1, {0.2, 0.2}}, {3, -1.0}});
  const auto want = oracle::convolve(a.coeffs(), b.coeffs());
  const FourierSymbol got = a * b;
  for (int n = -4; n <= 5; ++n) CHECK(std::abs(got.coeff(n) - oracle::coeff(want, n)) < 1e-15);
}

TEST_CASE("rational multiplication unions zeros") {
  const RationalSymbol r = lin(0.5) * lin(2.0);
  REQUIRE(r.zeros().size() == 2);
  CHECK(has_root(r.zeros(), 0.5));
  CHECK(has_root(r.zeros(), 2.0));
  CHECK(r.poles().empty());
}

TEST_CASE("zeros and poles at the origin are absorbed into the monomial") {
  const RationalSymbol r = RationalSymbol::z_power(-2) * lin(0.5);
  CHECK(r.monomial_exp() == -2);
  REQUIRE(r.zeros().size() == 1);
  CHECK(std::abs(r.zeros()[0] - 0.5) < 1e-15);
  CHECK(lin(0.0).monomial_exp() == 1);
}

TEST_CASE("conjugating B_a gives B_{1/conj a} on the circle") {
  const RationalSymbol b = blaschke_factor(0.5).conjugate();
  for (double th : {0.0, 0.4, 1.7, 3.0, 5.5}) {
    const cplx z = std::polar(1.0, th);
    const cplx want = std::conj(blaschke_factor(0.5).eval(z));
    CHECK(std::abs(b.eval(z) - want) < 1e-14);
  }
  // B_2 has its zero at 2 and its pole at 1/2.
  CHECK(has_root(b.zeros(), 2.0));
  CHECK(has_root(b.poles(), 0.5));
}

TEST_CASE("Blaschke factors are unimodular on the circle") {
  for (cplx a : {cplx(0.5), cplx(0.3, -0.6), cplx(0.0), cplx(-0.9, 0.1)}) {
    const RationalSymbol b = blaschke_factor(a);
    for (int j = 0; j < 16; ++j) CHECK(std::abs(std::abs(b(0.39 * j)) - 1.0) < 1e-14);
    if (a != cplx(0.0)) CHECK(std::abs(b.eval(a)) < 1e-15);
  }
}

TEST_CASE("inverse of 2+z is the alternating geometric series") {
  const int K = 30;
  const FourierInverse inv = invert(C(2) + Z(1), K);
  for (int n = 0; n <= 10; ++n) CHECK(std::abs(inv.symbol.coeff(n) - std::pow(-1.0, n) * std::pow(2.0, -n - 1)) < 1e-15);
  CHECK(inv.residual < std::pow(2.0, -K));
}

TEST_CASE("rational inverse and pow") {
  const RationalSymbol r = lin(0.5) / lin(3.0);
  const RationalSymbol one = r * r.inverse();
  CHECK(one.is_constant());
  CHECK(std::abs(one.scale() - 1.0) < 1e-15);
  const RationalSymbol cube = r.pow(3);
  CHECK(std::abs(cube(0.7) - std::pow(r(0.7), 3)) < 1e-14);
  CHECK(std::abs(r.pow(-2)(0.7) - std::pow(r(0.7), -2)) < 1e-14);
}

TEST_CASE("rational sum agrees pointwise") {
  const RationalSymbol a = lin(0.5) / lin(3.0), b = RationalSymbol::z_power(-1, 2.0);
  const RationalSymbol s = a + b, d = a - b;
  for (double th : {0.1, 1.3, 2.9}) {
    CHECK(std::abs(s(th) - (a(th) + b(th))) < 1e-13);
    CHECK(std::abs(d(th) - (a(th) - b(th))) < 1e-13);
  }
}

TEST_CASE("evaluating at a pole throws") {
  const RationalSymbol r = RationalSymbol::constant(1.0) / lin(0.5);
  CHECK_THROWS_AS(r.eval(0.5), DomainError);
}

// ---------------------------------------------------------------- Hardy projection

TEST_CASE("riesz projection") {
  const FourierSymbol s = Z(1) + Z(-1);
  const FourierSymbol plus = riesz_project(s, HardyPart::plus);
  CHECK(plus.coeffs().size() == 1);
  CHECK(plus.coeff(1) == cplx(1.0));
  CHECK(riesz_project(C(3), HardyPart::minus).is_zero());
  const FourierSymbol t({{-2, 1.0}, {0, 2.0}, {4, 0.5}});
  const FourierSymbol p1 = riesz_project(t, HardyPart::plus);
  CHECK(riesz_project(p1, HardyPart::plus).coeffs() == p1.coeffs());
  CHECK((p1 + riesz_project(t, HardyPart::minus)).coeffs() == t.coeffs());
}

TEST_CASE("Sobolev half seminorm") {
  CHECK(std::abs(sobolev_half_seminorm(Z(1) + Z(-1)) - std::sqrt(2.0)) < 1e-15);
  CHECK(sobolev_half_seminorm(C(5)) == 0.0);
  CHECK(std::abs(sobolev_half_seminorm(Z(3)) - std::sqrt(3.0)) < 1e-15);
  const FourierSymbol s({{-4, {0.1, 0.3}}, {-1, 2.0}, {2, -0.7}, {6, {0.0, 0.05}}});
  CHECK(std::abs(sobolev_half_seminorm(s) - std::sqrt(oracle::hankel_hs_squared(s.coeffs()))) < 1e-14);
}

// ---------------------------------------------------------------- winding

TEST_CASE("winding numbers") {
  CHECK(winding_number(Z(2)) == 2);
  const RationalSymbol r = RationalSymbol::z_power(-1) * lin(0.5) * lin(3.0);
  CHECK(r.winding_number() == 0);
  CHECK(winding_number(r) == oracle::winding([&](double th) { return r(th); }));
  const FourierSymbol e = symbols::exp(Z(1) + Z(-1));
  CHECK(winding_number(e) == 0);
  CHECK(numerical_index(Z(1)) == -1);
  CHECK(numerical_index(Z(-3)) == 3);
  CHECK(numerical_index(e) == 0);
}

TEST_CASE("winding of a product is the sum") {
  const FourierSymbol a = Z(2) * (C(3) + Z(1)), b = Z(-1) + Z(1, 0.2);
  CHECK(winding_number(a * b) == winding_number(a) + winding_number(b));
}

TEST_CASE("vanishing symbols are rejected") {
  CHECK_THROWS_AS(winding_number(C(1) - Z(1)), DomainError);
}

// ---------------------------------------------------------------- Laurent expansion

TEST_CASE("Laurent coefficients of rational symbols") {
  const auto z = laurent_coeffs(RationalSymbol::z_power(1), 8);
  CHECK(z.symbol.coeffs().size() == 1);
  CHECK(std::abs(z.symbol.coeff(1) - 1.0) < 1e-15);

  const RationalSymbol r = RationalSymbol::constant(1.0) / lin(3.0);
  const auto e = laurent_coeffs(r, 20);
  for (int n = 0; n <= 20; ++n) CHECK(std::abs(e.symbol.coeff(n) + std::pow(3.0, -n - 1)) < 1e-15);
  for (int n = -5; n < 0; ++n) CHECK(std::abs(e.symbol.coeff(n)) < 1e-15);

  const auto inv_z = laurent_coeffs(RationalSymbol::z_power(-1), 4);
  CHECK(std::abs(inv_z.symbol.coeff(-1) - 1.0) < 1e-15);
}

TEST_CASE("Laurent coefficients match direct quadrature") {
  const RationalSymbol r = RationalSymbol(cplx(0.4, 1.0), -1, {cplx(0.3, 0.2), cplx(-2.0, 0.5)},
                                          {cplx(0.0, 0.6), cplx(1.8, -0.3)});
  const auto e = laurent_coeffs(r, 24);
  for (int n = -6; n <= 6; ++n) {
    const cplx want = oracle::fourier_coefficient([&](double th) { return r(th); }, n);
    CHECK(std::abs(e.symbol.coeff(n) - want) < 1e-12);
  }
  CHECK(e.tail_bound < 1e-4);
}

TEST_CASE("Fourier coefficients of exp(z + zbar) are Bessel values") {
  const FourierSymbol e = FourierSymbol::from_function([](double th) { return std::exp(2.0 * std::cos(th)); },
                                                       1e-16);
  for (int n = -6; n <= 6; ++n) CHECK(std::abs(e.coeff(n) - oracle::bessel_i(n, 2.0)) < 1e-14);
  const FourierSymbol e2 = symbols::exp(Z(1) + Z(-1));
  for (int n = 0; n <= 6; ++n) CHECK(std::abs(e2.coeff(n) - oracle::bessel_i(n, 2.0)) < 1e-14);
}

TEST_CASE("Laurent polynomial to rational round trip") {
  const FourierSymbol s({{-2, 1.0}, {0, {0.3, -0.1}}, {1, 2.0}});
  const auto r = laurent_polynomial_as_rational(s);
  REQUIRE(r.has_value());
  for (double th : {0.0, 0.9, 2.2, 4.4}) CHECK(std::abs((*r)(th) - s(th)) < 1e-13);
  CHECK(!laurent_polynomial_as_rational(FourierSymbol()).has_value());
}

// ---------------------------------------------------------------- orders

TEST_CASE("orders at a point") {
  CHECK((RationalSymbol::z_power(1) * lin(0.5)).ord_at(0.0) == 1);
  CHECK(RationalSymbol::z_power(-1).ord_at(0.0) == -1);
  CHECK(lin(0.5).pow(2).ord_at(0.5) == 2);
  CHECK(lin(0.5).ord_at(0.2) == 0);
  // (z - 0.5)(z - 3) / (z - 0.5) at 0.5 is 0.5 - 3.
  const RationalSymbol r = lin(0.5).pow(2) * lin(3.0);
  CHECK(std::abs(r.regular_value_at(0.5) - cplx(-2.5)) < 1e-14);
}

// ---------------------------------------------------------------- polynomials

TEST_CASE("polynomial roots with multiplicity") {
  const Polynomial p = Polynomial::from_roots({0.5, 0.5, -2.0});
  const auto roots = p.roots();
  int total = 0;
  for (const Root& r : roots) {
    total += r.multiplicity;
    if (std::abs(r.value - 0.5) < 1e-6) CHECK(r.multiplicity == 2);
    if (std::abs(r.value + 2.0) < 1e-9) CHECK(r.multiplicity == 1);
  }
  CHECK(total == 3);
  const Polynomial d = p.derivative();
  for (double w : {0.0, 1.0, -0.7}) {
    const double h = 1e-6;
    const cplx fd = (p(w + h) - p(w - h)) / (2.0 * h);
    CHECK(std::abs(d(w) - fd) < 1e-8);
  }
}

TEST_CASE("factor on spectrum splits roots by the disk") {
  auto check = [](const Polynomial& f, std::vector<cplx> inside, std::vector<cplx> outside) {
    const SpectralFactors sf = factor_on_spectrum(f);
    for (cplx a : inside) CHECK(sf.p.ord_at(a) > 0);
    for (cplx a : outside) CHECK(sf.q.ord_at(a) > 0);
    for (double th : {0.2, 1.1, 2.5}) {
      const cplx z = std::polar(1.0, th);
      CHECK(std::abs(sf.p.eval(z) * sf.q.eval(z) - f(z)) < 1e-12);
    }
  };
  check(Polynomial::from_roots({0.0, 2.0}), {0.0}, {2.0});
  check(Polynomial::from_roots({0.5, 0.5, 3.0}), {0.5}, {3.0});
  check(Polynomial::from_roots({2.0}), {}, {2.0});
  CHECK(factor_on_spectrum(Polynomial::from_roots({2.0})).p.is_constant());
  CHECK_THROWS_AS(factor_on_spectrum(Polynomial::from_roots({1.0})), DomainError);
}

TEST_CASE("Blaschke factorization") {
  {
    const RationalSymbol r = lin(0.5);
    const auto bf = blaschke_factorize(r);
    REQUIRE(bf.disk_zeros.size() == 1);
    CHECK(std::abs(bf.disk_zeros[0] - 0.5) < 1e-14);
    CHECK(bf.residual < 1e-13);
    // outer = (z - 0.5) / B_{0.5} = -(1 - 0.5 z).
    for (double th : {0.0, 1.0, 2.0}) {
      const cplx z = std::polar(1.0, th);
      CHECK(std::abs(bf.outer.eval(z) + (1.0 - 0.5 * z)) < 1e-14);
    }
  }
  {
    const auto bf = blaschke_factorize(RationalSymbol::constant(2.0) + RationalSymbol::z_power(1));
    CHECK(bf.disk_zeros.empty());
    CHECK(bf.residual < 1e-13);
  }
  {
    const auto bf = blaschke_factorize(lin(0.5) * lin(3.0));
    REQUIRE(bf.disk_zeros.size() == 1);
    CHECK(bf.residual < 1e-13);
    for (cplx z : bf.outer.zeros()) CHECK(std::abs(z) > 1.0);
  }
}

// ---------------------------------------------------------------- log split

TEST_CASE("log split of exponential and shifted symbols") {
  {
    const LogSplit s = log_split(symbols::exp(Z(1)));
    CHECK(s.winding == 0);
    CHECK(std::abs(s.plus.coeff(1) - 1.0) < 1e-12);
    CHECK(riesz_project(s.minus, HardyPart::minus).sup_norm() < 1e-12);
    CHECK(s.minus.sup_norm() < 1e-12);
  }
  {
    const LogSplit s = log_split(Z(2) * symbols::exp(Z(-1)));
    CHECK(s.winding == 2);
    CHECK(std::abs(s.minus.coeff(-1) - 1.0) < 1e-12);
    CHECK(std::abs(s.plus.coeff(0)) < 1e-12);
  }
  {
    const LogSplit s = log_split(C(2) + Z(1));
    CHECK(s.winding == 0);
    CHECK(std::abs(s.plus.coeff(0) - std::log(2.0)) < 1e-12);
    for (int k = 1; k <= 12; ++k) {
      const double want = std::pow(-1.0, k + 1) / (k * std::pow(2.0, k));
      CHECK(std::abs(s.plus.coeff(k) - want) < 1e-12);
    }
    CHECK(s.residual < 1e-10);
    for (double th : {0.3, 2.0}) CHECK(std::abs(s.reconstruct(th) - (2.0 + std::polar(1.0, th))) < 1e-10);
  }
}

// ---------------------------------------------------------------- structured symbols

TEST_CASE("smooth symbol algebra") {
  const SmoothSymbol a{lin(0.4) / lin(2.5), Z(1, 0.3) + Z(-2, cplx(0.0, 0.2))};
  const SmoothSymbol b{RationalSymbol::z_power(-1, 1.5), Z(-1, 0.1)};
  const FourierSymbol fa = a.to_fourier();
  for (double th : {0.1, 1.9, 4.0}) {
    CHECK(std::abs(fa(th) - a(th)) < 1e-13);
    CHECK(std::abs((a * b)(th) - a(th) * b(th)) < 1e-13);
    CHECK(std::abs(a.inverse()(th) * a(th) - 1.0) < 1e-13);
    CHECK(std::abs(a.conjugate()(th) - std::conj(a(th))) < 1e-13);
  }
  CHECK(a.winding_number() == 1);
  CHECK(b.winding_number() == -1);
  const SmoothSymbol back = SmoothSymbol::from_log_split(log_split(fa));
  CHECK(std::abs(back(0.8) - a(0.8)) < 1e-10);
}
