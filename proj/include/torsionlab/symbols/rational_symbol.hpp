#pragma once

#include <optional>
#include <vector>

#include "torsionlab/symbols/fourier_symbol.hpp"
#include "torsionlab/symbols/polynomial.hpp"
#include "torsionlab/symbols/tolerances.hpp"
#include "torsionlab/types.hpp"

namespace torsionlab::symbols {

// r(z) = c z^m prod (z - a_i) / prod (z - b_j).
// Construction absorbs zeros/poles at the origin into m and cancels zero/pole
// pairs closer than tol.root, so the representation is reduced.
class RationalSymbol {
 public:
  RationalSymbol() = default;  // the constant 1
  RationalSymbol(cplx scale, int monomial_exp, std::vector<cplx> zeros,
                 std::vector<cplx> poles, const Tolerances& tol = default_tolerances());

  static RationalSymbol constant(cplx c);
  static RationalSymbol z_power(int m, cplx c = 1.0);
  // (z - a) with a possibly zero.
  static RationalSymbol linear(cplx a);
  // Root-finds numerator and denominator; both must be nonzero.
  static RationalSymbol from_polynomials(const Polynomial& num, const Polynomial& den,
                                        const Tolerances& tol = default_tolerances());

  cplx scale() const { return scale_; }
  int monomial_exp() const { return m_; }
  const std::vector<cplx>& zeros() const { return zeros_; }
  const std::vector<cplx>& poles() const { return poles_; }
  const Tolerances& tolerances() const { return tol_; }

  bool is_constant() const { return m_ == 0 && zeros_.empty() && poles_.empty(); }
  bool circle_regular() const;

  // Throws DomainError naming the pole if z is a pole.
  cplx eval(cplx z) const;
  cplx operator()(double theta) const;

  RationalSymbol operator*(const RationalSymbol& o) const;
  RationalSymbol operator/(const RationalSymbol& o) const;
  RationalSymbol operator+(const RationalSymbol& o) const;
  RationalSymbol operator-(const RationalSymbol& o) const;
  RationalSymbol pow(int k) const;
  RationalSymbol inverse() const;  // requires circle-regular
  // The symbol conj(r(z)) on |z| = 1, as a rational function of z.
  RationalSymbol conjugate() const;

  int winding_number() const;
  int ord_at(cplx lambda) const;
  // (r(z) (z - lambda)^{-ord}) evaluated at lambda.
  cplx regular_value_at(cplx lambda) const;
  // Zeros and poles (with 0 when m != 0) strictly inside the unit disk,
  // de-duplicated to within tol.root.
  std::vector<cplx> disk_points() const;

  Polynomial numerator() const;    // c prod (z - a) z^{max(m,0)}
  Polynomial denominator() const;  // prod (z - b) z^{max(-m,0)}

 private:
  cplx scale_ = 1.0;
  int m_ = 0;
  std::vector<cplx> zeros_;
  std::vector<cplx> poles_;
  Tolerances tol_ = default_tolerances();
};

struct LaurentExpansion {
  FourierSymbol symbol;     // coefficients for |n| <= K
  double tail_bound = 0.0;  // bound on sum_{|n| > K} |c_n|
};

// Laurent coefficients on the annulus containing the unit circle.
LaurentExpansion laurent_coeffs(const RationalSymbol& r, int K);

}  // namespace torsionlab::symbols

namespace torsionlab::symbols {

// Rational form of a Laurent polynomial z^lo P(z) (roots of P found
// numerically). Returns nullopt for the zero symbol or when the frequency
// span exceeds max_span.
std::optional<RationalSymbol> laurent_polynomial_as_rational(const FourierSymbol& s, int max_span = 48);

}  // namespace torsionlab::symbols
