#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "toric/cone.hpp"

namespace toric {

/// A lattice polytope conv(vertices) ⊂ R^r. Polygons in R^2 keep their
/// vertices in counter-clockwise order starting at the lexicographically
/// smallest one; other polytopes keep them sorted.
class LatticePolytope {
 public:
  LatticePolytope() = default;
  /// conv(points); redundant points are dropped. Throws on an empty list.
  static LatticePolytope hull(std::span<const LatticeVector> points);
  static LatticePolytope hull(std::initializer_list<LatticeVector> points);

  std::size_t ambient_rank() const { return rank_; }
  std::size_t dim() const { return dim_; }
  const std::vector<LatticeVector>& vertices() const { return vertices_; }

  bool contains(const LatticeVector& p) const;
  bool contains_in_relative_interior(const LatticeVector& p) const;

  /// Sorted lattice points, by bounding-box enumeration.
  std::vector<LatticeVector> lattice_points() const;
  std::vector<LatticeVector> interior_points() const;  // relative interior
  std::vector<LatticeVector> boundary_points() const;

  /// Polygon only: edges as (vertex i, vertex i+1), counter-clockwise.
  std::vector<std::pair<LatticeVector, LatticeVector>> edges() const;
  /// Polygon only: lattice points strictly inside edges.
  std::vector<LatticeVector> edge_interior_points() const;
  /// Polygon only: twice the Euclidean area, i.e. the normalized area.
  Integer twice_area() const;

  bool is_basic_triangle() const;
  bool is_unit_parallelogram() const;

  /// The same polytope in Z^dim, via an affine lattice isomorphism of
  /// aff(P) ∩ Z^r onto Z^dim.
  LatticePolytope intrinsic() const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.rank_ == b.rank_ && a.vertices_ == b.vertices_;
  }
  friend bool operator<(const LatticePolytope& a, const LatticePolytope& b) { return a.vertices_ < b.vertices_; }

  std::string to_string() const;

 private:
  std::size_t rank_ = 0;
  std::size_t dim_ = 0;
  std::vector<LatticeVector> vertices_;
  Cone homogenization_;  // cone over P × {1}
};

/// Twice the signed area of the triangle (a, b, c) in Z^2.
Integer orientation(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c);

/// Lattice points on the segment [a, b] including both ends, from a to b.
std::vector<LatticeVector> segment_points(const LatticeVector& a, const LatticeVector& b);

/// (x, 1) ∈ Z^{r+1}.
LatticeVector lift_to_height_one(const LatticeVector& x);

}  // namespace toric
