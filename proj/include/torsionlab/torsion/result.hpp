#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torsionlab/types.hpp"

namespace torsionlab::torsion {

enum class Method { det, tame, integral, factorized, exp, lefschetz };

std::string to_string(Method m);
std::optional<Method> method_from_string(const std::string& s);

struct TorsionResult {
  cplx value = 1.0;
  Method method = Method::det;
  std::vector<int> dims;  // schedule dims or quadrature grid sizes
  double err_estimate = 0.0;
  std::vector<std::string> notes;
  std::vector<cplx> history;  // value at each entry of dims
};

}  // namespace torsionlab::torsion
