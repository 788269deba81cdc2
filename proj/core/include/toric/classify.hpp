#pragma once

#include <cstddef>
#include <optional>

#include "toric/cone.hpp"
#include "toric/polytope.hpp"

namespace toric {

/// m_σ with ⟨m_σ, Gen(σ)⟩ = 1 and the index min{κ ≥ 1 : κ·m_σ ∈ M}.
struct GorensteinData {
  Covector m;
  Integer index;
};

std::optional<GorensteinData> gorenstein_data(const Cone& c);

struct SingularityReport {
  bool smooth = false;
  bool q_factorial = false;
  std::optional<GorensteinData> q_gorenstein;
  bool gorenstein = false;
  bool terminal = false;
  bool canonical = false;
  bool log_terminal = false;
  std::optional<bool> lci;  // Gorenstein case only
  bool rational = true;
  std::optional<std::size_t> embedding_dim;
};

/// Cones that are not full-dimensional are classified in N_σ.
SingularityReport classify(const Cone& c);

/// Every lattice point of P is a vertex.
bool is_elementary(const LatticePolytope& p);

/// Lattice equivalence to a Nakajima polytope; dim P ≤ 2.
bool is_nakajima(const LatticePolytope& p);

/// edim − 1 for a rank-3 Gorenstein non-smooth cone with edim ≥ 5.
std::size_t lri_general_section(const Cone& c);

/// The cone re-coordinatized in N₀ = {n : ⟨m_σ, n⟩ ∈ Z}.
struct IndexOneCover {
  Cone cone;         // in N₀ coordinates
  IntMatrix basis;   // rows: a basis of N₀ inside N
  Integer index;     // [N : N₀]
  Covector m;        // m_σ in N₀ coordinates; integral
  LatticeVector to_ambient(const LatticeVector& y) const;
};

IndexOneCover index_one_cover(const Cone& c);

}  // namespace toric
