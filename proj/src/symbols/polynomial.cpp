#include "torsionlab/symbols/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace torsionlab::symbols {

Polynomial::Polynomial(std::vector<cplx> ascending) : a_(std::move(ascending)) {
  normalize();
}

void Polynomial::normalize() {
  double scale = 0.0;
  for (const auto& c : a_) scale = std::max(scale, std::abs(c));
  while (!a_.empty() && std::abs(a_.back()) <= 1e-14 * scale) a_.pop_back();
}

Polynomial Polynomial::from_roots(const std::vector<cplx>& roots, cplx leading) {
  std::vector<cplx> a{leading};
  for (const auto& r : roots) {
    std::vector<cplx> next(a.size() + 1, 0.0);
    for (std::size_t k = 0; k < a.size(); ++k) {
      next[k + 1] += a[k];
      next[k] -= r * a[k];
    }
    a = std::move(next);
  }
  return Polynomial(std::move(a));
}

Polynomial Polynomial::monomial(int k, cplx c) {
  std::vector<cplx> a(k + 1, 0.0);
  a[k] = c;
  return Polynomial(std::move(a));
}

cplx Polynomial::operator()(cplx w) const {
  cplx acc = 0.0;
  for (auto it = a_.rbegin(); it != a_.rend(); ++it) acc = acc * w + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<cplx> d;
  for (std::size_t k = 1; k < a_.size(); ++k) d.push_back(static_cast<double>(k) * a_[k]);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<cplx> s(std::max(a_.size(), o.a_.size()), 0.0);
  for (std::size_t k = 0; k < a_.size(); ++k) s[k] += a_[k];
  for (std::size_t k = 0; k < o.a_.size(); ++k) s[k] += o.a_[k];
  return Polynomial(std::move(s));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * cplx(-1.0); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (a_.empty() || o.a_.empty()) return Polynomial();
  std::vector<cplx> p(a_.size() + o.a_.size() - 1, 0.0);
  for (std::size_t j = 0; j < a_.size(); ++j)
    for (std::size_t k = 0; k < o.a_.size(); ++k) p[j + k] += a_[j] * o.a_[k];
  return Polynomial(std::move(p));
}

Polynomial Polynomial::operator*(cplx s) const {
  std::vector<cplx> p = a_;
  for (auto& c : p) c *= s;
  return Polynomial(std::move(p));
}

std::vector<Root> Polynomial::roots(double cluster_tol) const {
  const int n = degree();
  if (n < 1) return {};
  std::vector<cplx> raw;
  // Exact zero roots first; the companion matrix handles the rest.
  int zeros = 0;
  while (zeros < n && a_[zeros] == cplx(0.0)) ++zeros;
  const int m = n - zeros;
  if (m > 0) {
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(m, m);
    for (int k = 1; k < m; ++k) C(k, k - 1) = 1.0;
    for (int k = 0; k < m; ++k) C(k, m - 1) = -a_[zeros + k] / a_[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    const Polynomial dp = derivative();
    for (int k = 0; k < m; ++k) {
      cplx r = es.eigenvalues()(k);
      for (int it = 0; it < 3; ++it) {
        const cplx d = dp(r);
        if (std::abs(d) < 1e-300) break;
        const cplx step = (*this)(r) / d;
        if (!std::isfinite(std::abs(step)) || std::abs(step) > 1e-3 * (1.0 + std::abs(r))) break;
        r -= step;
      }
      raw.push_back(r);
    }
  }
  std::vector<Root> out;
  if (zeros > 0) out.push_back({0.0, zeros});
  std::vector<bool> used(raw.size(), false);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (used[i]) continue;
    cplx sum = raw[i];
    int count = 1;
    used[i] = true;
    for (std::size_t j = i + 1; j < raw.size(); ++j) {
      if (!used[j] && std::abs(raw[j] - raw[i]) <= cluster_tol * (1.0 + std::abs(raw[i]))) {
        used[j] = true;
        sum += raw[j];
        ++count;
      }
    }
    cplx r = sum / static_cast<double>(count);
    if (count > 1) {
      // A root of multiplicity m is a simple root of the (m-1)-th derivative,
      // where Newton converges quadratically again.
      Polynomial q = *this;
      for (int k = 1; k < count; ++k) q = q.derivative();
      const Polynomial dq = q.derivative();
      for (int it = 0; it < 3; ++it) {
        const cplx d = dq(r);
        if (std::abs(d) < 1e-300) break;
        const cplx step = q(r) / d;
        if (!std::isfinite(std::abs(step)) || std::abs(step) > cluster_tol * (1.0 + std::abs(r))) break;
        r -= step;
      }
    }
    out.push_back({r, count});
  }
  return out;
}

}  // namespace torsionlab::symbols
