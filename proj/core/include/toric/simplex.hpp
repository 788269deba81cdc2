#pragma once

#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// maximize c·x subject to A x ≤ b, x ≥ 0, with b ≥ 0 so that x = 0 is
/// feasible. Solved exactly over Q with Bland's rule.
struct LinearProgram {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

struct LPSolution {
  bool bounded = true;
  Rational value;
  std::vector<Rational> x;
};

LPSolution maximize(const LinearProgram& lp);

}  // namespace toric
