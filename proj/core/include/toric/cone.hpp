#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// A strongly convex rational polyhedral cone in N_R = R^r.
///
/// Both descriptions are kept: the primitive extreme ray generators Gen(σ)
/// and the inequality description (primitive inner facet normals plus a
/// basis of equations cutting out lin(σ)). Rays and facets are sorted, so
/// two cones are equal iff their ray lists are equal.
class Cone {
 public:
  /// The cone {0} in a lattice of the given rank.
  static Cone zero(std::size_t rank);

  std::size_t rank() const { return rank_; }
  std::size_t dim() const { return span_.dim; }
  bool is_full_dimensional() const { return dim() == rank_; }

  const std::vector<LatticeVector>& rays() const { return rays_; }
  const std::vector<LatticeVector>& facets() const { return facets_; }
  const std::vector<LatticeVector>& equations() const { return equations_; }
  /// Lattice basis of N_σ = lin(σ) ∩ N and the matching coordinates.
  const SpanLattice& span() const { return span_; }

  bool contains(const LatticeVector& x) const;
  bool contains_in_relative_interior(const LatticeVector& x) const;
  bool has_ray(const LatticeVector& v) const;

  /// The face cut out by a supporting functional m ∈ σ∨.
  Cone face(const LatticeVector& supporting) const;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.rank_ == b.rank_ && a.rays_ == b.rays_;
  }

  std::string to_string() const;

 private:
  friend Cone make_cone(std::span<const LatticeVector> vs);
  friend Cone make_cone_in_rank(std::span<const LatticeVector> vs, std::size_t rank);

  std::size_t rank_ = 0;
  SpanLattice span_;
  std::vector<LatticeVector> rays_;
  std::vector<LatticeVector> facets_;
  std::vector<LatticeVector> equations_;
};

/// pos(vs): drops redundant generators and primitivises the extreme rays.
/// Throws DomainError("not pointed") if the cone contains a line.
Cone make_cone(std::span<const LatticeVector> vs);
Cone make_cone(std::initializer_list<LatticeVector> vs);
/// Same as make_cone, but accepts an empty (or all-zero) list.
Cone make_cone_in_rank(std::span<const LatticeVector> vs, std::size_t rank);

/// The dual cone σ∨ ⊂ M_R. When σ is not full-dimensional, σ∨ contains the
/// linear subspace σ^⊥, recorded as `lineality`.
struct PolyhedralCone {
  std::size_t rank = 0;
  std::vector<LatticeVector> generators;
  std::vector<LatticeVector> lineality;

  bool is_pointed() const { return lineality.empty(); }
  std::size_t dim() const;
  /// Throws DomainError when the cone has lineality.
  Cone pointed() const;
};

PolyhedralCone dual_cone(const Cone& c);

/// All faces, including {0} and c itself, ordered by dimension then rays.
std::vector<Cone> faces(const Cone& c);
bool is_face_of(const Cone& tau, const Cone& sigma);

bool is_simplicial(const Cone& c);
/// mult(σ; N) for a simplicial cone; throws "multiplicity undefined" otherwise.
Integer multiplicity(const Cone& c);
bool is_basic(const Cone& c);

/// Cone given by inequalities ⟨w, x⟩ ≥ 0 and equations ⟨e, x⟩ = 0, which
/// must describe a pointed cone.
Cone cone_from_constraints(std::size_t rank, std::span<const LatticeVector> inequalities,
                           std::span<const LatticeVector> equations);

Cone intersect(const Cone& a, const Cone& b);

/// A triangulation of c into simplicial cones using only its own rays
/// (pulling the first ray). Each entry lists the rays of one simplicial cone.
std::vector<std::vector<LatticeVector>> triangulate(const Cone& c);

/// Some x = Σ λ_i v_i with λ_i ≥ 0 rational, if one exists. Used as an
/// independent membership test.
bool in_nonnegative_span(std::span<const LatticeVector> generators, const LatticeVector& x);

}  // namespace toric
