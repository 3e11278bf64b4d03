#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "torsionlab/types.hpp"

namespace torsionlab::sections {

enum class FunctionKind { entire_series, holomorphic_contour, smooth_real };

// A scalar function to be applied to operator sections.
//   entire_series: f(w) = sum c_k w^k with c_k from `coefficient`
//   holomorphic_contour: evaluator analytic inside `contour_radius`
//   smooth_real: evaluator on the real line (hermitian sections only)
class FunctionSpec {
 public:
  static FunctionSpec polynomial(std::vector<cplx> ascending);
  static FunctionSpec exp();
  static FunctionSpec identity() { return polynomial({0.0, 1.0}); }
  static FunctionSpec holomorphic(std::function<cplx(cplx)> value, double contour_radius,
                                  std::string name);
  static FunctionSpec smooth_real(std::function<cplx(cplx)> value,
                                  std::function<cplx(cplx)> derivative, std::string name);
  static FunctionSpec power(double t);  // w^t on (0, inf)
  static FunctionSpec log();            // principal log on (0, inf)

  FunctionKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  bool is_polynomial() const { return degree_.has_value(); }
  bool is_exponential() const { return exponential_; }
  std::optional<int> degree() const { return degree_; }
  double contour_radius() const { return contour_radius_; }

  cplx operator()(cplx w) const;
  // c_k of an entire series (0 beyond the degree of a polynomial).
  cplx coefficient(int k) const;
  // Smallest number of terms whose majorant tail at radius r is below
  // tol * max(1, majorant(r)).
  int terms_for_radius(double r, double tol = 1e-16) const;
  // f'. Available for every kind; smooth_real needs the derivative evaluator.
  FunctionSpec derivative() const;
  // For polynomial specs, the ascending coefficients.
  const std::vector<cplx>& polynomial_coeffs() const { return poly_; }

 private:
  FunctionKind kind_ = FunctionKind::entire_series;
  std::string name_;
  std::optional<int> degree_;
  std::vector<cplx> poly_;
  bool exponential_ = false;
  double contour_radius_ = 0.0;
  std::function<cplx(cplx)> value_;
  std::function<cplx(cplx)> derivative_;
  std::function<cplx(int)> coefficient_;
};

}  // namespace torsionlab::sections
