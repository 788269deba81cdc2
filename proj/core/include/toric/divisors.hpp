#pragma once

#include <map>
#include <optional>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

/// A piecewise-linear Δ-support function, given by its values on the ray
/// generators. D_ψ = −Σ ψ(n(ρ)) V(ρ).
struct SupportFunction {
  Fan fan;
  std::map<LatticeVector, Integer> ray_values;
  /// m_σ per maximal cone, in the order of fan.maximal_cones().
  std::optional<std::vector<Covector>> linear;

  const Integer& value(const LatticeVector& ray) const;
};

/// ψ ≡ 1 on every ray: the canonical divisor K = D_ψ.
SupportFunction canonical_support(const Fan& f);

/// Solves ⟨m_σ, v⟩ = ψ(v) on the rays of every maximal cone (all rays at
/// once, also for non-simplicial cones). Throws DomainError when some cone
/// admits no rational solution.
SupportFunction with_linear_representatives(SupportFunction psi);

bool is_cartier(const SupportFunction& psi);
/// Least k ≥ 1 with k·ψ integrally linear on every maximal cone; empty if ψ
/// is not even rationally linear on some cone.
std::optional<Integer> qcartier_index(const SupportFunction& psi);

/// ⟨m_σ, v⟩ > ψ(v) for every maximal cone σ and every ray v ∉ σ.
/// Throws DomainError when linear representatives are missing.
bool is_strictly_upper_convex(const SupportFunction& psi);

struct DiscrepancyEntry {
  LatticeVector ray;
  Rational discrepancy;
};

struct DiscrepancyReport {
  Cone base_cone;
  Covector m_sigma;
  std::vector<DiscrepancyEntry> entries;  // sorted by ray

  bool is_crepant() const;
  bool is_log_terminal() const;
};

/// a_j = ⟨m_σ, v′_j⟩ − 1 for the rays of the refinement that are not in Gen(base).
DiscrepancyReport discrepancies(const Cone& base, const Fan& refinement);

}  // namespace toric
