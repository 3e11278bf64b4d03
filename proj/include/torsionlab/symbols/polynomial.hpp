#pragma once

#include <vector>

#include "torsionlab/types.hpp"

namespace torsionlab::symbols {

struct Root {
  cplx value;
  int multiplicity = 1;
};

// Dense polynomial with ascending coefficients p(w) = sum a_k w^k.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<cplx> ascending);

  static Polynomial from_roots(const std::vector<cplx>& roots, cplx leading = 1.0);
  static Polynomial monomial(int k, cplx c = 1.0);

  const std::vector<cplx>& coeffs() const { return a_; }
  int degree() const { return static_cast<int>(a_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return a_.empty(); }
  cplx leading() const { return a_.empty() ? cplx(0.0) : a_.back(); }

  cplx operator()(cplx w) const;
  Polynomial derivative() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(cplx s) const;

  // Roots via companion-matrix eigenvalues, Newton-polished, with nearby
  // roots (within cluster_tol relative to scale) merged into one multiple root
  // at their centroid.
  std::vector<Root> roots(double cluster_tol = 1e-6) const;

 private:
  void normalize();
  std::vector<cplx> a_;
};

}  // namespace torsionlab::symbols
