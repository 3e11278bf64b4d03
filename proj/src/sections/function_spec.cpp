#include "torsionlab/sections/function_spec.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "torsionlab/errors.hpp"

namespace torsionlab::sections {

FunctionSpec FunctionSpec::polynomial(std::vector<cplx> ascending) {
  while (!ascending.empty() && ascending.back() == cplx(0.0)) ascending.pop_back();
  FunctionSpec f;
  f.kind_ = FunctionKind::entire_series;
  f.degree_ = static_cast<int>(ascending.size()) - 1;
  f.poly_ = ascending;
  std::ostringstream os;
  os << "poly[";
  for (std::size_t k = 0; k < ascending.size(); ++k) os << (k ? "," : "") << ascending[k].real();
  os << "]";
  f.name_ = os.str();
  f.value_ = [c = ascending](cplx w) {
    cplx acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * w + *it;
    return acc;
  };
  f.coefficient_ = [c = ascending](int k) {
    return k >= 0 && k < static_cast<int>(c.size()) ? c[k] : cplx(0.0);
  };
  return f;
}

FunctionSpec FunctionSpec::exp() {
  FunctionSpec f;
  f.kind_ = FunctionKind::entire_series;
  f.name_ = "exp";
  f.exponential_ = true;
  f.value_ = [](cplx w) { return std::exp(w); };
  f.coefficient_ = [](int k) { return cplx(std::exp(-std::lgamma(k + 1.0))); };
  return f;
}

FunctionSpec FunctionSpec::holomorphic(std::function<cplx(cplx)> value, double contour_radius,
                                       std::string name) {
  FunctionSpec f;
  f.kind_ = FunctionKind::holomorphic_contour;
  f.value_ = std::move(value);
  f.contour_radius_ = contour_radius;
  f.name_ = std::move(name);
  return f;
}

FunctionSpec FunctionSpec::smooth_real(std::function<cplx(cplx)> value,
                                       std::function<cplx(cplx)> derivative, std::string name) {
  FunctionSpec f;
  f.kind_ = FunctionKind::smooth_real;
  f.value_ = std::move(value);
  f.derivative_ = std::move(derivative);
  f.name_ = std::move(name);
  return f;
}

FunctionSpec FunctionSpec::power(double t) {
  auto f = smooth_real([t](cplx w) { return cplx(std::pow(w.real(), t)); },
                       [t](cplx w) { return cplx(t * std::pow(w.real(), t - 1.0)); },
                       "pow(" + std::to_string(t) + ")");
  return f;
}

FunctionSpec FunctionSpec::log() {
  return smooth_real([](cplx w) { return cplx(std::log(w.real())); },
                     [](cplx w) { return cplx(1.0 / w.real()); }, "log");
}

cplx FunctionSpec::operator()(cplx w) const { return value_(w); }

cplx FunctionSpec::coefficient(int k) const {
  if (!coefficient_) throw std::logic_error("function spec " + name_ + " has no series coefficients");
  return coefficient_(k);
}

int FunctionSpec::terms_for_radius(double r, double tol) const {
  if (degree_) return *degree_ + 1;
  if (!coefficient_) throw std::logic_error("function spec " + name_ + " has no series coefficients");
  double total = 0.0;
  int small_run = 0;
  for (int k = 0; k < 10000; ++k) {
    const double term = std::abs(coefficient_(k)) * std::pow(r, k);
    total += term;
    small_run = (k > r && term <= tol * std::max(1.0, total)) ? small_run + 1 : 0;
    if (small_run >= 3) return k + 1;
  }
  throw NumericalError("series for " + name_ + " does not converge at radius " + std::to_string(r));
}

FunctionSpec FunctionSpec::derivative() const {
  if (degree_) {
    std::vector<cplx> d;
    for (std::size_t k = 1; k < poly_.size(); ++k) d.push_back(static_cast<double>(k) * poly_[k]);
    return polynomial(d);
  }
  if (exponential_) return exp();
  if (kind_ == FunctionKind::smooth_real && derivative_) {
    return smooth_real(derivative_, nullptr, name_ + "'");
  }
  if (coefficient_) {
    FunctionSpec f;
    f.kind_ = FunctionKind::entire_series;
    f.name_ = name_ + "'";
    f.coefficient_ = [c = coefficient_](int k) { return static_cast<double>(k + 1) * c(k + 1); };
    f.value_ = [c = f.coefficient_](cplx w) {
      cplx acc = 0.0, p = 1.0;
      for (int k = 0; k < 400; ++k, p *= w) acc += c(k) * p;
      return acc;
    };
    return f;
  }
  throw std::logic_error("function spec " + name_ + " has no derivative");
}

}  // namespace torsionlab::sections
