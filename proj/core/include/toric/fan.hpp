#pragma once

#include <cstddef>
#include <vector>

#include "toric/cone.hpp"

namespace toric {

/// A finite fan, stored through its maximal cones in canonical order.
/// Equality ignores the order in which cones were supplied.
class Fan {
 public:
  explicit Fan(std::size_t rank = 0) : rank_(rank) {}

  std::size_t rank() const { return rank_; }
  const std::vector<Cone>& maximal_cones() const { return cones_; }
  /// Gen(Δ): sorted, deduplicated ray generators.
  const std::vector<LatticeVector>& rays() const { return rays_; }

  bool contains(const LatticeVector& x) const;
  /// True iff every maximal cone is simplicial with multiplicity 1.
  bool is_basic() const;
  /// |Δ| = σ, checked as: every cone lies in σ, and every facet of a
  /// maximal cone either lies in the boundary of σ or is shared by exactly
  /// two maximal cones. Assumes a valid fan of full-dimensional cones.
  bool has_support(const Cone& sigma) const;

  friend bool operator==(const Fan& a, const Fan& b) { return a.rank_ == b.rank_ && a.cones_ == b.cones_; }

 private:
  friend Fan make_fan(std::vector<Cone> cones, std::size_t rank);
  std::size_t rank_ = 0;
  std::vector<Cone> cones_;
  std::vector<LatticeVector> rays_;
};

/// Validates that every pairwise intersection is a common face; keeps the
/// maximal cones only. Throws DomainError naming the offending pair.
Fan make_fan(std::vector<Cone> cones, std::size_t rank);
Fan make_fan(std::vector<Cone> cones);

/// Stellar subdivision at the primitive vector v ∈ |f|.
Fan star_subdivision(const Fan& f, const LatticeVector& v);

}  // namespace toric
