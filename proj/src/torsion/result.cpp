#include "torsionlab/torsion/result.hpp"

namespace torsionlab::torsion {

std::string to_string(Method m) {
  switch (m) {
    case Method::det: return "det";
    case Method::tame: return "tame";
    case Method::integral: return "integral";
    case Method::factorized: return "factorized";
    case Method::exp: return "exp";
    case Method::lefschetz: return "lefschetz";
  }
  return "?";
}

std::optional<Method> method_from_string(const std::string& s) {
  for (Method m : {Method::det, Method::tame, Method::integral, Method::factorized, Method::exp,
                   Method::lefschetz}) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

}  // namespace torsionlab::torsion
