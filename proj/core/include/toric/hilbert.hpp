#pragma once

#include <cstddef>
#include <vector>

#include "toric/cone.hpp"

namespace toric {

/// The unique minimal generating system of the semigroup σ ∩ N.
struct HilbertBasis {
  Cone cone;
  std::vector<LatticeVector> members;  // sorted
};

HilbertBasis hilbert_basis(const Cone& c);
/// Cones with lineality have no unique minimal generating system.
HilbertBasis hilbert_basis(const PolyhedralCone& c);

/// Lattice points of the half-open fundamental parallelepiped of a
/// simplicial cone (excluding the origin), in ambient coordinates.
std::vector<LatticeVector> parallelepiped_points(const Cone& simplicial);

/// #Hilb(σ∨); requires σ full-dimensional so that σ∨ is pointed.
std::size_t embedding_dimension(const Cone& c);

/// A binomial z^lhs = z^rhs in the variables z_i = e(h_i), h_i the sorted
/// Hilbert basis of σ∨.
struct BinomialRelation {
  std::vector<unsigned> lhs;
  std::vector<unsigned> rhs;
  unsigned degree() const;
  friend bool operator==(const BinomialRelation&, const BinomialRelation&) = default;
};

/// Binomials among the monomials of total degree ≤ degree_bound that,
/// together with their monomial multiples, connect every fibre of the
/// degree map. Lower-degree relations are reused before new ones are added.
std::vector<BinomialRelation> toric_relations(const Cone& c, unsigned degree_bound);

}  // namespace toric
