#pragma once

#include <utility>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

/// p/q = a₁ − 1/(a₂ − 1/(… − 1/a_s)), every aᵢ ≥ 2.
struct CFExpansion {
  Integer p;
  Integer q;
  std::vector<Integer> terms;

  /// Evaluates the expansion back to a rational.
  Rational value() const;
};

CFExpansion cf_expansion(const Integer& p, const Integer& q);

struct ExceptionalCurve {
  LatticeVector ray;
  Integer self_intersection;
};

struct MinimalResolution {
  Fan fan;
  /// In order from the first to the second ray of the input cone.
  std::vector<ExceptionalCurve> exceptional;
};

/// The minimal resolution of a 2-dimensional cone: the fan over the compact
/// edges of conv((σ ∩ N) ∖ {0}).
MinimalResolution minimal_resolution(const Cone& c);

/// (p, q) with σ ≅ pos{(0,1), (p,−q)}, 0 ≤ q < p, the first ray of c going
/// to (0,1).
std::pair<Integer, Integer> cyclic_quotient_type(const Cone& c);

}  // namespace toric
