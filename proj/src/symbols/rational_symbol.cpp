#include "torsionlab/symbols/rational_symbol.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "torsionlab/errors.hpp"

namespace torsionlab::symbols {

namespace {

std::string fmt(cplx z) {
  std::ostringstream os;
  os.precision(12);
  os << "(" << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i)";
  return os.str();
}

std::vector<cplx> expand(const std::vector<Root>& roots) {
  std::vector<cplx> out;
  for (const auto& r : roots)
    for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.value);
  return out;
}

// Dense Laurent vector: value[k] is the coefficient of z^{offset + k}.
struct Dense {
  int offset = 0;
  std::vector<cplx> value{1.0};
};

Dense convolve(const Dense& a, const Dense& b) {
  Dense out;
  out.offset = a.offset + b.offset;
  out.value.assign(a.value.size() + b.value.size() - 1, 0.0);
  for (std::size_t j = 0; j < a.value.size(); ++j) {
    if (a.value[j] == cplx(0.0)) continue;
    for (std::size_t k = 0; k < b.value.size(); ++k) out.value[j + k] += a.value[j] * b.value[k];
  }
  return out;
}

}  // namespace

RationalSymbol::RationalSymbol(cplx scale, int monomial_exp, std::vector<cplx> zeros,
                               std::vector<cplx> poles, const Tolerances& tol)
    : scale_(scale), m_(monomial_exp), tol_(tol) {
  if (scale == cplx(0.0)) throw DomainError("rational symbol with zero scale");
  for (const auto& a : zeros) {
    if (std::abs(a) < tol_.root)
      ++m_;
    else
      zeros_.push_back(a);
  }
  for (const auto& b : poles) {
    if (std::abs(b) < tol_.root) {
      --m_;
      continue;
    }
    auto it = std::find_if(zeros_.begin(), zeros_.end(),
                           [&](cplx a) { return std::abs(a - b) < tol_.root; });
    if (it != zeros_.end())
      zeros_.erase(it);
    else
      poles_.push_back(b);
  }
}

RationalSymbol RationalSymbol::constant(cplx c) { return RationalSymbol(c, 0, {}, {}); }

RationalSymbol RationalSymbol::z_power(int m, cplx c) { return RationalSymbol(c, m, {}, {}); }

RationalSymbol RationalSymbol::linear(cplx a) { return RationalSymbol(1.0, 0, {a}, {}); }

RationalSymbol RationalSymbol::from_polynomials(const Polynomial& num, const Polynomial& den,
                                                const Tolerances& tol) {
  if (num.is_zero()) throw DomainError("rational symbol is identically zero");
  if (den.is_zero()) throw DomainError("rational symbol with zero denominator");
  return RationalSymbol(num.leading() / den.leading(), 0, expand(num.roots()),
                        expand(den.roots()), tol);
}

bool RationalSymbol::circle_regular() const {
  auto near = [&](cplx a) { return std::abs(std::abs(a) - 1.0) < tol_.circle; };
  return std::none_of(zeros_.begin(), zeros_.end(), near) &&
         std::none_of(poles_.begin(), poles_.end(), near);
}

cplx RationalSymbol::eval(cplx z) const {
  if (m_ < 0 && std::abs(z) < tol_.root) throw DomainError("evaluation at the pole 0");
  cplx num = scale_ * (m_ == 0 ? cplx(1.0) : std::pow(z, m_));
  cplx den = 1.0;
  for (const auto& a : zeros_) num *= (z - a);
  for (const auto& b : poles_) {
    if (std::abs(z - b) < tol_.root) throw DomainError("evaluation at the pole " + fmt(b));
    den *= (z - b);
  }
  return num / den;
}

cplx RationalSymbol::operator()(double theta) const { return eval(std::polar(1.0, theta)); }

RationalSymbol RationalSymbol::operator*(const RationalSymbol& o) const {
  std::vector<cplx> z = zeros_, p = poles_;
  z.insert(z.end(), o.zeros_.begin(), o.zeros_.end());
  p.insert(p.end(), o.poles_.begin(), o.poles_.end());
  return RationalSymbol(scale_ * o.scale_, m_ + o.m_, std::move(z), std::move(p), tol_);
}

RationalSymbol RationalSymbol::inverse() const {
  if (!circle_regular()) throw DomainError("inverse of a rational symbol vanishing on the circle");
  return RationalSymbol(1.0 / scale_, -m_, poles_, zeros_, tol_);
}

RationalSymbol RationalSymbol::operator/(const RationalSymbol& o) const {
  return *this * RationalSymbol(1.0 / o.scale_, -o.m_, o.poles_, o.zeros_, tol_);
}

RationalSymbol RationalSymbol::pow(int k) const {
  RationalSymbol base = k >= 0 ? *this : RationalSymbol(1.0 / scale_, -m_, poles_, zeros_, tol_);
  RationalSymbol out = constant(1.0);
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

RationalSymbol RationalSymbol::operator+(const RationalSymbol& o) const {
  // r1 + r2 = z^mu (c1 z^{m1-mu} N1 D2 + c2 z^{m2-mu} N2 D1) / (D1 D2)
  const int mu = std::min(m_, o.m_);
  const Polynomial n1 = Polynomial::from_roots(zeros_, scale_);
  const Polynomial n2 = Polynomial::from_roots(o.zeros_, o.scale_);
  const Polynomial d1 = Polynomial::from_roots(poles_);
  const Polynomial d2 = Polynomial::from_roots(o.poles_);
  const Polynomial sum = Polynomial::monomial(m_ - mu) * n1 * d2 +
                         Polynomial::monomial(o.m_ - mu) * n2 * d1;
  if (sum.is_zero()) throw DomainError("sum of rational symbols is identically zero");
  std::vector<cplx> poles = poles_;
  poles.insert(poles.end(), o.poles_.begin(), o.poles_.end());
  return RationalSymbol(sum.leading(), mu, expand(sum.roots()), std::move(poles), tol_);
}

RationalSymbol RationalSymbol::operator-(const RationalSymbol& o) const {
  return *this + o * constant(-1.0);
}

RationalSymbol RationalSymbol::conjugate() const {
  // On |z| = 1: conj(z - a) = (1/z - conj a) = -conj(a) (z - 1/conj a) / z.
  cplx scale = std::conj(scale_);
  std::vector<cplx> z, p;
  for (const auto& a : zeros_) {
    scale *= -std::conj(a);
    z.push_back(1.0 / std::conj(a));
  }
  for (const auto& b : poles_) {
    scale /= -std::conj(b);
    p.push_back(1.0 / std::conj(b));
  }
  const int m = -m_ - static_cast<int>(zeros_.size()) + static_cast<int>(poles_.size());
  return RationalSymbol(scale, m, std::move(z), std::move(p), tol_);
}

int RationalSymbol::winding_number() const {
  if (!circle_regular()) throw DomainError("winding number of a symbol vanishing on the circle");
  int w = m_;
  for (const auto& a : zeros_) w += std::abs(a) < 1.0;
  for (const auto& b : poles_) w -= std::abs(b) < 1.0;
  return w;
}

int RationalSymbol::ord_at(cplx lambda) const {
  int ord = std::abs(lambda) < tol_.root ? m_ : 0;
  for (const auto& a : zeros_) ord += std::abs(a - lambda) < tol_.root;
  for (const auto& b : poles_) ord -= std::abs(b - lambda) < tol_.root;
  return ord;
}

cplx RationalSymbol::regular_value_at(cplx lambda) const {
  cplx v = scale_;
  if (std::abs(lambda) >= tol_.root && m_ != 0) v *= std::pow(lambda, m_);
  for (const auto& a : zeros_)
    if (std::abs(a - lambda) >= tol_.root) v *= (lambda - a);
  for (const auto& b : poles_)
    if (std::abs(b - lambda) >= tol_.root) v /= (lambda - b);
  return v;
}

std::vector<cplx> RationalSymbol::disk_points() const {
  std::vector<cplx> pts;
  auto add = [&](cplx a) {
    if (std::abs(a) >= 1.0) return;
    for (const auto& q : pts)
      if (std::abs(q - a) < tol_.root) return;
    pts.push_back(a);
  };
  if (m_ != 0) add(0.0);
  for (const auto& a : zeros_) add(a);
  for (const auto& b : poles_) add(b);
  return pts;
}

Polynomial RationalSymbol::numerator() const {
  return Polynomial::from_roots(zeros_, scale_) * Polynomial::monomial(std::max(m_, 0));
}

Polynomial RationalSymbol::denominator() const {
  return Polynomial::from_roots(poles_) * Polynomial::monomial(std::max(-m_, 0));
}

LaurentExpansion laurent_coeffs(const RationalSymbol& r, int K) {
  if (!r.circle_regular()) throw DomainError("Laurent expansion of a symbol with a pole on the circle");
  double rho = 0.0;
  for (const auto& b : r.poles()) rho = std::max(rho, std::abs(b) < 1.0 ? std::abs(b) : 1.0 / std::abs(b));
  // Series length per pole so that the dropped geometric remainder is below 1e-20.
  const int extra = rho > 0.0 ? static_cast<int>(std::ceil(std::log(1e-20) / std::log(rho))) + 1 : 0;
  const int T = K + extra + static_cast<int>(r.zeros().size()) + std::abs(r.monomial_exp());

  Dense acc;
  acc.offset = r.monomial_exp();
  acc.value = {r.scale()};
  for (const auto& a : r.zeros()) acc = convolve(acc, Dense{0, {-a, 1.0}});
  for (const auto& b : r.poles()) {
    Dense s;
    s.value.resize(T + 1);
    if (std::abs(b) < 1.0) {
      // 1/(z-b) = sum_{k>=0} b^k z^{-k-1}
      s.offset = -(T + 1);
      cplx p = 1.0;
      for (int k = 0; k <= T; ++k, p *= b) s.value[T - k] = p;
    } else {
      // 1/(z-b) = -sum_{k>=0} z^k / b^{k+1}
      s.offset = 0;
      cplx p = -1.0 / b;
      for (int k = 0; k <= T; ++k, p /= b) s.value[k] = p;
    }
    acc = convolve(acc, s);
  }

  FourierSymbol::Coeffs c;
  double tail = 0.0;
  for (std::size_t k = 0; k < acc.value.size(); ++k) {
    const int n = acc.offset + static_cast<int>(k);
    if (std::abs(n) <= K)
      c[n] += acc.value[k];
    else
      tail += std::abs(acc.value[k]);
  }
  if (rho > 0.0) tail += 1e-20 * std::abs(r.scale());
  return {FourierSymbol(std::move(c)), tail};
}

}  // namespace torsionlab::symbols

namespace torsionlab::symbols {

std::optional<RationalSymbol> laurent_polynomial_as_rational(const FourierSymbol& s, int max_span) {
  if (s.is_zero()) return std::nullopt;
  const int lo = s.min_frequency();
  const int hi = s.max_frequency();
  if (hi - lo > max_span) return std::nullopt;
  std::vector<cplx> a(hi - lo + 1, 0.0);
  for (const auto& [n, c] : s.coeffs()) a[n - lo] = c;
  const Polynomial p(a);
  return RationalSymbol(p.leading(), lo, expand(p.roots()), {});
}

}  // namespace torsionlab::symbols
