#include "toric/polytope.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace toric {

LatticeVector lift_to_height_one(const LatticeVector& x) {
  std::vector<Integer> c(x.begin(), x.end());
  c.emplace_back(1);
  return LatticeVector(std::move(c));
}

namespace {

LatticeVector drop_last(const LatticeVector& x) {
  return LatticeVector(std::vector<Integer>(x.begin(), x.end() - 1));
}

}  // namespace

Integer orientation(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

std::vector<LatticeVector> segment_points(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector d = b - a;
  if (d.is_zero()) return {a};
  Integer g = d.content();
  LatticeVector step = primitive(d);
  std::vector<LatticeVector> out;
  LatticeVector p = a;
  for (Integer k = 0; k <= g; ++k) {
    out.push_back(p);
    p += step;
  }
  return out;
}

LatticePolytope LatticePolytope::hull(std::span<const LatticeVector> points) {
  if (points.empty()) throw DomainError("LatticePolytope: empty point set");
  LatticePolytope p;
  p.rank_ = points.front().rank();
  std::vector<LatticeVector> lifted;
  for (const auto& x : points) {
    if (x.rank() != p.rank_) throw DomainError("LatticePolytope: rank mismatch");
    lifted.push_back(lift_to_height_one(x));
  }
  p.homogenization_ = make_cone_in_rank(lifted, p.rank_ + 1);
  p.dim_ = p.homogenization_.dim() - 1;
  for (const auto& r : p.homogenization_.rays()) p.vertices_.push_back(drop_last(r));
  std::sort(p.vertices_.begin(), p.vertices_.end());

  if (p.rank_ == 2 && p.dim_ == 2) {
    const LatticeVector first = p.vertices_.front();
    std::sort(p.vertices_.begin() + 1, p.vertices_.end(), [&](const LatticeVector& a, const LatticeVector& b) {
      return orientation(first, a, b) > 0;
    });
  }
  return p;
}

LatticePolytope LatticePolytope::hull(std::initializer_list<LatticeVector> points) {
  return hull(std::span<const LatticeVector>(points.begin(), points.size()));
}

bool LatticePolytope::contains(const LatticeVector& x) const {
  return x.rank() == rank_ && homogenization_.contains(lift_to_height_one(x));
}

bool LatticePolytope::contains_in_relative_interior(const LatticeVector& x) const {
  return x.rank() == rank_ && homogenization_.contains_in_relative_interior(lift_to_height_one(x));
}

std::vector<LatticeVector> LatticePolytope::lattice_points() const {
  std::vector<LatticeVector> out;
  if (vertices_.empty()) return out;
  std::vector<Integer> lo(vertices_.front().begin(), vertices_.front().end());
  std::vector<Integer> hi = lo;
  for (const auto& v : vertices_)
    for (std::size_t i = 0; i < rank_; ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (v[i] > hi[i]) hi[i] = v[i];
    }
  LatticeVector x(lo);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == rank_) {
      if (contains(x)) out.push_back(x);
      return;
    }
    for (x[i] = lo[i]; x[i] <= hi[i]; ++x[i]) rec(i + 1);
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVector> LatticePolytope::interior_points() const {
  std::vector<LatticeVector> out;
  for (auto& x : lattice_points())
    if (contains_in_relative_interior(x)) out.push_back(std::move(x));
  return out;
}

std::vector<LatticeVector> LatticePolytope::boundary_points() const {
  std::vector<LatticeVector> out;
  for (auto& x : lattice_points())
    if (!contains_in_relative_interior(x)) out.push_back(std::move(x));
  return out;
}

std::vector<std::pair<LatticeVector, LatticeVector>> LatticePolytope::edges() const {
  if (rank_ != 2 || dim_ != 2) throw DomainError("edges: not a polygon in Z^2");
  std::vector<std::pair<LatticeVector, LatticeVector>> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    out.emplace_back(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
  return out;
}

std::vector<LatticeVector> LatticePolytope::edge_interior_points() const {
  std::vector<LatticeVector> out;
  for (const auto& [a, b] : edges()) {
    auto pts = segment_points(a, b);
    out.insert(out.end(), pts.begin() + 1, pts.end() - 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer LatticePolytope::twice_area() const {
  if (rank_ != 2 || dim_ != 2) throw DomainError("twice_area: not a polygon in Z^2");
  Integer s = 0;
  for (std::size_t i = 1; i + 1 < vertices_.size(); ++i) s += orientation(vertices_[0], vertices_[i], vertices_[i + 1]);
  return s;
}

bool LatticePolytope::is_basic_triangle() const {
  if (dim_ != 2 || vertices_.size() != 3) return false;
  std::vector<LatticeVector> lifted;
  for (const auto& v : vertices_) lifted.push_back(lift_to_height_one(v));
  return lattice_determinant(lifted) == 1;
}

bool LatticePolytope::is_unit_parallelogram() const {
  if (dim_ != 2 || vertices_.size() != 4) return false;
  // In cyclic order a, b, c, d: a parallelogram iff a + c = b + d.
  std::vector<LatticeVector> v = vertices_;
  if (rank_ != 2) v = intrinsic().vertices_;
  if (v[0] + v[2] != v[1] + v[3]) return false;
  std::vector<LatticeVector> lifted{lift_to_height_one(v[0]), lift_to_height_one(v[1]), lift_to_height_one(v[3])};
  return lattice_determinant(lifted) == 1;
}

LatticePolytope LatticePolytope::intrinsic() const {
  const LatticeVector& origin = vertices_.front();
  std::vector<LatticeVector> diffs;
  for (const auto& v : vertices_) diffs.push_back(v - origin);
  SpanLattice span = span_lattice(diffs, rank_);
  std::vector<LatticeVector> local;
  for (const auto& d : diffs) local.push_back(span.coordinates(d));
  if (span.dim == 0) return hull({LatticeVector(std::size_t{0})});
  return hull(local);
}

std::string LatticePolytope::to_string() const {
  std::ostringstream os;
  os << "conv{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) os << ',';
    os << vertices_[i];
  }
  os << '}';
  return os.str();
}

}  // namespace toric
