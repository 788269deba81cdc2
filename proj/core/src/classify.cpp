#include "toric/classify.hpp"

#include <algorithm>
#include <functional>

#include "toric/hilbert.hpp"

namespace toric {

namespace {

Cone in_span_coordinates(const Cone& c) {
  std::vector<LatticeVector> local;
  for (const auto& r : c.rays()) local.push_back(c.span().coordinates(r));
  return make_cone_in_rank(local, c.dim());
}

// Lattice points x ≠ 0 of σ with ⟨m, x⟩ ≤ 1, i.e. of conv(0 ∪ Gen(σ)).
std::vector<LatticeVector> slab_points(const Cone& c, const Covector& m) {
  const std::size_t r = c.rank();
  std::vector<Integer> lo(r, 0), hi(r, 0);
  for (const auto& g : c.rays())
    for (std::size_t i = 0; i < r; ++i) {
      if (g[i] < lo[i]) lo[i] = g[i];
      if (g[i] > hi[i]) hi[i] = g[i];
    }
  std::vector<LatticeVector> out;
  LatticeVector x(lo);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == r) {
      if (!x.is_zero() && c.contains(x) && m.pair(x) <= 1) out.push_back(x);
      return;
    }
    for (x[i] = lo[i]; x[i] <= hi[i]; ++x[i]) rec(i + 1);
  };
  rec(0);
  return out;
}

}  // namespace

std::optional<GorensteinData> gorenstein_data(const Cone& c) {
  if (c.dim() == 0) return GorensteinData{Covector(std::vector<Rational>(c.rank())), 1};
  if (!c.is_full_dimensional()) {
    auto local = gorenstein_data(in_span_coordinates(c));
    if (!local) return std::nullopt;
    // Lift k·m to M, then divide back.
    LatticeVector km = local->m.scaled_to_integral();
    LatticeVector lifted = c.span().lift_functional(km);
    std::vector<Rational> m(lifted.begin(), lifted.end());
    for (auto& x : m) {
      x /= local->index;
      x.canonicalize();
    }
    return GorensteinData{Covector(std::move(m)), local->index};
  }
  std::vector<Rational> ones(c.rays().size(), Rational(1));
  auto sol = solve_rational(c.rays(), ones);
  if (!sol) return std::nullopt;
  Covector m(std::move(*sol));
  for (const auto& g : c.rays())
    if (m.pair(g) != 1) return std::nullopt;
  GorensteinData gd{m, m.denominator()};
  if (gd.index == 1) {
    LatticeVector mi = m.scaled_to_integral();
    if (!mi.is_primitive()) throw std::logic_error("gorenstein_data: integral m_σ is not primitive");
  }
  return gd;
}

SingularityReport classify(const Cone& c) {
  SingularityReport rep;
  if (c.dim() == 0) {
    rep.smooth = rep.q_factorial = rep.gorenstein = rep.terminal = rep.canonical = rep.log_terminal = true;
    rep.q_gorenstein = gorenstein_data(c);
    rep.lci = true;
    return rep;
  }
  if (!c.is_full_dimensional()) {
    rep = classify(in_span_coordinates(c));
    rep.q_gorenstein = gorenstein_data(c);
    return rep;
  }

  rep.smooth = is_basic(c);
  rep.q_factorial = is_simplicial(c);
  rep.q_gorenstein = gorenstein_data(c);
  rep.log_terminal = rep.q_gorenstein.has_value();
  rep.gorenstein = rep.q_gorenstein && rep.q_gorenstein->index == 1;

  if (rep.q_gorenstein) {
    const Covector& m = rep.q_gorenstein->m;
    rep.canonical = true;
    rep.terminal = true;
    for (const auto& x : slab_points(c, m)) {
      if (m.pair(x) < 1) rep.canonical = false;
      if (!c.has_ray(x)) rep.terminal = false;
    }
    rep.terminal = rep.terminal && rep.canonical;
  }

  if (rep.gorenstein && c.rank() <= 3) rep.lci = is_nakajima(LatticePolytope::hull(c.rays()));
  rep.embedding_dim = embedding_dimension(c);
  return rep;
}

bool is_elementary(const LatticePolytope& p) { return p.lattice_points().size() == p.vertices().size(); }

bool is_nakajima(const LatticePolytope& p) {
  if (p.dim() > 2) throw DomainError("is_nakajima: polytopes of dimension > 2 are out of scope");
  if (p.dim() < 2) return true;
  LatticePolytope q = p.ambient_rank() == 2 ? p : p.intrinsic();

  // Up to lattice equivalence the 2-dimensional Nakajima polygons are
  // {0 ≤ t ≤ a, 0 ≤ s ≤ b + c t}: for some primitive edge normal φ, the two
  // edges on which φ is not constant each have |φ(edge)| = lattice length.
  const auto edges = q.edges();
  for (const auto& [a, b] : edges) {
    LatticeVector d = b - a;
    LatticeVector phi = primitive(LatticeVector(std::vector<Integer>{-d[1], d[0]}));
    std::size_t slanted = 0;
    bool ok = true;
    for (const auto& [u, v] : edges) {
      LatticeVector e = v - u;
      Integer h = dot(phi, e);
      if (h == 0) continue;
      ++slanted;
      if (abs(h) != e.content()) ok = false;
    }
    if (ok && slanted == 2) return true;
  }
  return false;
}

std::size_t lri_general_section(const Cone& c) {
  if (c.rank() != 3 || !c.is_full_dimensional())
    throw DomainError("lri_general_section: " + c.to_string() + " is not a full-dimensional rank-3 cone");
  auto gd = gorenstein_data(c);
  if (!gd || gd->index != 1) throw DomainError("lri_general_section: " + c.to_string() + " is not Gorenstein");
  if (is_basic(c)) throw DomainError("lri_general_section: " + c.to_string() + " is smooth");
  std::size_t edim = embedding_dimension(c);
  if (edim < 5)
    throw DomainError("lri_general_section: " + c.to_string() + " has embedding dimension " + std::to_string(edim) +
                      " < 5");
  return edim - 1;
}

LatticeVector IndexOneCover::to_ambient(const LatticeVector& y) const {
  LatticeVector x(basis.cols());
  for (std::size_t i = 0; i < basis.rows(); ++i) x += y[i] * basis.row(i);
  return x;
}

IndexOneCover index_one_cover(const Cone& c) {
  if (!c.is_full_dimensional()) throw DomainError("index_one_cover: " + c.to_string() + " is not full-dimensional");
  auto gd = gorenstein_data(c);
  if (!gd) throw DomainError("index_one_cover: " + c.to_string() + " is not Q-Gorenstein");
  if (gd->index == 1) throw DomainError("index_one_cover: " + c.to_string() + " is already index one");
  const std::size_t r = c.rank();
  const Integer& l = gd->index;
  LatticeVector a = gd->m.scaled_to_integral();

  // N₀ = {n : ⟨a, n⟩ ≡ 0 mod ℓ} is the projection of ker[a | ℓ].
  IntMatrix congruence(1, r + 1);
  for (std::size_t i = 0; i < r; ++i) congruence(0, i) = a[i];
  congruence(0, r) = l;
  std::vector<LatticeVector> gens;
  for (const auto& k : integer_kernel(congruence))
    gens.push_back(LatticeVector(std::vector<Integer>(k.begin(), k.begin() + static_cast<long>(r))));
  HermiteForm hf = hermite_normal_form(IntMatrix::from_rows(gens, r));
  IntMatrix basis(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) basis(i, j) = hf.h(i, j);
  if (abs(determinant(basis)) != l) throw std::logic_error("index_one_cover: sublattice has the wrong index");

  // g = Σ y_i basis_i  ⟺  basisᵀ y = g.
  std::vector<LatticeVector> bt;
  for (std::size_t j = 0; j < r; ++j) bt.push_back(basis.col(j));
  std::vector<LatticeVector> local;
  for (const auto& g : c.rays()) {
    std::vector<Rational> rhs(g.begin(), g.end());
    auto y = solve_rational(bt, rhs);
    LatticeVector yi(r);
    for (std::size_t i = 0; i < r; ++i) {
      if ((*y)[i].get_den() != 1) throw std::logic_error("index_one_cover: generator outside N₀");
      yi[i] = (*y)[i].get_num();
    }
    local.push_back(yi);
  }
  std::vector<Rational> m0;
  for (std::size_t i = 0; i < r; ++i) m0.push_back(gd->m.pair(basis.row(i)));
  return IndexOneCover{make_cone_in_rank(local, r), basis, l, Covector(std::move(m0))};
}

}  // namespace toric
