#include "toric/cone.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace toric {

namespace {

void sort_unique(std::vector<LatticeVector>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

// Calls fn on every k-subset of {0, ..., n-1}.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Facets and extreme rays of a full-dimensional cone in Z^d given by the
// (primitive, deduplicated) generators gens.
struct FullDimDescription {
  std::vector<LatticeVector> rays;
  std::vector<LatticeVector> facets;
};

FullDimDescription describe_full_dimensional(const std::vector<LatticeVector>& gens, std::size_t d) {
  FullDimDescription out;
  if (d == 0) return out;
  if (d == 1) {
    bool pos = false, neg = false;
    for (const auto& g : gens) (g[0] > 0 ? pos : neg) = true;
    if (pos && neg) throw DomainError("not pointed");
    out.facets.push_back(LatticeVector{pos ? 1L : -1L});
    out.rays.push_back(LatticeVector{pos ? 1L : -1L});
    return out;
  }
  std::set<LatticeVector> facets;
  for_each_subset(gens.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<LatticeVector> sub;
    for (auto i : idx) sub.push_back(gens[i]);
    LatticeVector n = normal_vector(sub);
    if (n.is_zero()) return;
    bool pos = false, neg = false;
    for (const auto& g : gens) {
      int s = sgn(dot(n, g));
      if (s > 0) pos = true;
      if (s < 0) neg = true;
    }
    if (pos && neg) return;
    if (!pos && !neg) return;  // all generators on the hyperplane: not full-dimensional
    facets.insert(pos ? n : -n);
  });
  out.facets.assign(facets.begin(), facets.end());
  if (rank_of(out.facets) < d) throw DomainError("not pointed");
  for (const auto& g : gens) {
    std::vector<LatticeVector> tight;
    for (const auto& f : out.facets)
      if (dot(f, g) == 0) tight.push_back(f);
    if (rank_of(tight) == d - 1) out.rays.push_back(g);
  }
  sort_unique(out.rays);
  return out;
}

}  // namespace

Cone Cone::zero(std::size_t rank) { return make_cone_in_rank({}, rank); }

Cone make_cone_in_rank(std::span<const LatticeVector> vs, std::size_t rank) {
  std::vector<LatticeVector> gens;
  for (const auto& v : vs) {
    if (v.rank() != rank) throw DomainError("make_cone: generator " + v.to_string() + " has wrong rank");
    if (!v.is_zero()) gens.push_back(primitive(v));
  }
  sort_unique(gens);

  Cone c;
  c.rank_ = rank;
  c.span_ = span_lattice(gens, rank);
  const std::size_t d = c.span_.dim;

  std::vector<LatticeVector> local;
  local.reserve(gens.size());
  for (const auto& g : gens) local.push_back(primitive(c.span_.coordinates(g)));
  sort_unique(local);

  FullDimDescription desc = describe_full_dimensional(local, d);
  for (const auto& r : desc.rays) c.rays_.push_back(c.span_.lift(r));
  for (const auto& f : desc.facets) c.facets_.push_back(c.span_.lift_functional(f));
  c.equations_ = c.span_.orthogonal();
  sort_unique(c.rays_);
  sort_unique(c.facets_);
  return c;
}

Cone make_cone(std::span<const LatticeVector> vs) {
  if (vs.empty()) throw DomainError("make_cone: empty generator list");
  return make_cone_in_rank(vs, vs.front().rank());
}

Cone make_cone(std::initializer_list<LatticeVector> vs) {
  return make_cone(std::span<const LatticeVector>(vs.begin(), vs.size()));
}

bool Cone::contains(const LatticeVector& x) const {
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, x) < 0) return false;
  return true;
}

bool Cone::contains_in_relative_interior(const LatticeVector& x) const {
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, x) <= 0) return false;
  return true;
}

bool Cone::has_ray(const LatticeVector& v) const { return std::binary_search(rays_.begin(), rays_.end(), v); }

Cone Cone::face(const LatticeVector& supporting) const {
  std::vector<LatticeVector> on;
  for (const auto& r : rays_) {
    Integer s = dot(supporting, r);
    if (s < 0) throw DomainError("face: functional is not in the dual cone");
    if (s == 0) on.push_back(r);
  }
  return make_cone_in_rank(on, rank_);
}

std::string Cone::to_string() const {
  std::ostringstream os;
  os << "pos{";
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (i) os << ',';
    os << rays_[i];
  }
  os << '}';
  return os.str();
}

std::size_t PolyhedralCone::dim() const {
  std::vector<LatticeVector> all = generators;
  for (const auto& l : lineality) {
    all.push_back(l);
  }
  return rank_of(all);
}

Cone PolyhedralCone::pointed() const {
  if (!is_pointed()) throw DomainError("cone has nontrivial lineality space");
  return make_cone_in_rank(generators, rank);
}

PolyhedralCone dual_cone(const Cone& c) {
  PolyhedralCone d;
  d.rank = c.rank();
  d.generators = c.facets();
  d.lineality = c.equations();
  if (c.dim() == 0) {
    // σ = {0}: σ∨ is all of M.
    d.generators.clear();
  }
  return d;
}

std::vector<Cone> faces(const Cone& c) {
  std::set<std::vector<LatticeVector>> seen;
  std::vector<Cone> out;
  std::function<void(const Cone&)> visit = [&](const Cone& f) {
    if (!seen.insert(f.rays()).second) return;
    out.push_back(f);
    for (const auto& n : f.facets()) visit(f.face(n));
  };
  visit(c);
  if (seen.insert(std::vector<LatticeVector>{}).second) out.push_back(Cone::zero(c.rank()));
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.rays() < b.rays();
  });
  return out;
}

bool is_face_of(const Cone& tau, const Cone& sigma) {
  for (const auto& r : tau.rays())
    if (!sigma.contains(r)) return false;
  // Smallest face of sigma containing tau: cut by every facet tight on tau.
  std::vector<LatticeVector> face_rays = sigma.rays();
  for (const auto& f : sigma.facets()) {
    bool tight = std::all_of(tau.rays().begin(), tau.rays().end(), [&](const LatticeVector& r) { return dot(f, r) == 0; });
    if (!tight) continue;
    std::erase_if(face_rays, [&](const LatticeVector& r) { return dot(f, r) != 0; });
  }
  return face_rays == tau.rays();
}

bool is_simplicial(const Cone& c) { return c.rays().size() == c.dim(); }

Integer multiplicity(const Cone& c) {
  if (!is_simplicial(c)) throw DomainError("multiplicity undefined for non-simplicial cone " + c.to_string());
  return lattice_determinant(c.rays());
}

bool is_basic(const Cone& c) { return is_simplicial(c) && multiplicity(c) == 1; }

Cone cone_from_constraints(std::size_t rank, std::span<const LatticeVector> inequalities,
                           std::span<const LatticeVector> equations) {
  std::vector<LatticeVector> all(equations.begin(), equations.end());
  all.insert(all.end(), inequalities.begin(), inequalities.end());
  auto feasible = [&](const LatticeVector& x) {
    for (const auto& e : equations)
      if (dot(e, x) != 0) return false;
    for (const auto& w : inequalities)
      if (dot(w, x) < 0) return false;
    return true;
  };
  std::set<LatticeVector> rays;
  if (rank == 1) {
    for (long s : {1L, -1L}) {
      LatticeVector x{s};
      if (feasible(x)) rays.insert(x);
    }
  } else {
    for_each_subset(all.size(), rank - 1, [&](const std::vector<std::size_t>& idx) {
      std::vector<LatticeVector> sub;
      for (auto i : idx) sub.push_back(all[i]);
      LatticeVector n = normal_vector(sub);
      if (n.is_zero()) return;
      if (feasible(n)) rays.insert(n);
      if (feasible(-n)) rays.insert(-n);
    });
  }
  std::vector<LatticeVector> rv(rays.begin(), rays.end());
  for (const auto& r : rv)
    if (rays.count(-r)) throw DomainError("not pointed");
  return make_cone_in_rank(rv, rank);
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.rank() != b.rank()) throw DomainError("intersect: rank mismatch");
  std::vector<LatticeVector> ineq = a.facets();
  ineq.insert(ineq.end(), b.facets().begin(), b.facets().end());
  std::vector<LatticeVector> eq = a.equations();
  eq.insert(eq.end(), b.equations().begin(), b.equations().end());
  sort_unique(ineq);
  sort_unique(eq);
  return cone_from_constraints(a.rank(), ineq, eq);
}

std::vector<std::vector<LatticeVector>> triangulate(const Cone& c) {
  if (is_simplicial(c)) return {c.rays()};
  const LatticeVector& apex = c.rays().front();
  std::vector<std::vector<LatticeVector>> out;
  for (const auto& f : c.facets()) {
    if (dot(f, apex) == 0) continue;
    for (auto simplex : triangulate(c.face(f))) {
      simplex.push_back(apex);
      std::sort(simplex.begin(), simplex.end());
      out.push_back(std::move(simplex));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_nonnegative_span(std::span<const LatticeVector> generators, const LatticeVector& x) {
  if (x.is_zero()) return true;
  std::vector<LatticeVector> gens;
  for (const auto& g : generators)
    if (!g.is_zero()) gens.push_back(g);
  if (gens.empty()) return false;
  const std::size_t d = rank_of(gens);
  std::vector<LatticeVector> with_x = gens;
  with_x.push_back(x);
  if (rank_of(with_x) != d) return false;
  // Carathéodory: x is a nonnegative combination of some linearly
  // independent subset, which extends to a basis of the span.
  bool found = false;
  for_each_subset(gens.size(), d, [&](const std::vector<std::size_t>& idx) {
    if (found) return;
    std::vector<LatticeVector> sub;
    for (auto i : idx) sub.push_back(gens[i]);
    if (rank_of(sub) != d) return;
    // Solve Σ λ_i sub_i = x, i.e. rows = coordinates, unknowns = λ.
    std::vector<LatticeVector> rows(x.rank(), LatticeVector(d));
    std::vector<Rational> rhs(x.rank());
    for (std::size_t k = 0; k < x.rank(); ++k) {
      for (std::size_t i = 0; i < d; ++i) rows[k][i] = sub[i][k];
      rhs[k] = x[k];
    }
    auto sol = solve_rational(rows, rhs);
    if (!sol) return;
    if (std::all_of(sol->begin(), sol->end(), [](const Rational& l) { return l >= 0; })) found = true;
  });
  return found;
}

}  // namespace toric
