#pragma once

namespace torsionlab::symbols {

struct Tolerances {
  double root = 1e-9;     // two roots closer than this are the same point
  double circle = 1e-6;   // zeros/poles this close to |z| = 1 are degenerate
  double trim = 1e-15;    // relative coefficient trim for sampled symbols
  double vanish = 1e-10;  // sampled modulus below this counts as vanishing
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace torsionlab::symbols
