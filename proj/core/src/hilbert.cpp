#include "toric/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace toric {

std::vector<LatticeVector> parallelepiped_points(const Cone& simplicial) {
  if (!is_simplicial(simplicial)) throw DomainError("parallelepiped_points: cone is not simplicial");
  const SpanLattice& span = simplicial.span();
  const std::size_t d = simplicial.dim();
  if (d == 0) return {};

  // Generators in N_σ coordinates, as the rows of g.
  std::vector<LatticeVector> local;
  for (const auto& r : simplicial.rays()) local.push_back(span.coordinates(r));
  IntMatrix g = IntMatrix::from_rows(local, d);

  // Z^d / (row lattice of g) ≅ ⊕ Z/d_i; representatives y * q^{-1}, 0 ≤ y_i < d_i.
  SmithForm s = smith_normal_form(g);
  IntMatrix q_inv = unimodular_inverse(s.q);
  std::vector<Integer> factors = s.invariant_factors();

  // λ = x * g^{-1}, computed by solving g^T λ^T = x^T.
  std::vector<LatticeVector> gt_rows;
  for (std::size_t i = 0; i < d; ++i) gt_rows.push_back(g.col(i));

  std::vector<LatticeVector> out;
  std::vector<Integer> y(d, 0);
  while (true) {
    LatticeVector x(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) x[j] += y[i] * q_inv(i, j);

    std::vector<Rational> rhs(x.begin(), x.end());
    auto lambda = solve_rational(gt_rows, rhs);
    LatticeVector reduced = x;
    for (std::size_t i = 0; i < d; ++i) {
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), (*lambda)[i].get_num_mpz_t(), (*lambda)[i].get_den_mpz_t());
      if (fl != 0) reduced -= fl * local[i];
    }
    if (!reduced.is_zero()) out.push_back(span.lift(reduced));

    std::size_t k = 0;
    while (k < d) {
      if (++y[k] < factors[k]) break;
      y[k] = 0;
      ++k;
    }
    if (k == d) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

HilbertBasis hilbert_basis(const Cone& c) {
  HilbertBasis hb{c, {}};
  if (c.dim() == 0) return hb;

  std::set<LatticeVector> candidates(c.rays().begin(), c.rays().end());
  for (const auto& simplex : triangulate(c)) {
    Cone piece = make_cone_in_rank(simplex, c.rank());
    for (auto& p : parallelepiped_points(piece)) candidates.insert(std::move(p));
  }

  // x is reducible iff x - h ∈ σ for some other candidate h: every
  // decomposition x = y + z dominates a Hilbert basis element, and the
  // candidates contain the whole Hilbert basis.
  std::vector<LatticeVector> cand(candidates.begin(), candidates.end());
  for (const auto& x : cand) {
    bool reducible = false;
    for (const auto& h : cand) {
      if (h == x) continue;
      if (c.contains(x - h)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) hb.members.push_back(x);
  }
  return hb;
}

HilbertBasis hilbert_basis(const PolyhedralCone& c) {
  if (!c.is_pointed()) throw DomainError("hilbert_basis: cone is not pointed, the minimal generating system is not unique");
  return hilbert_basis(c.pointed());
}

std::size_t embedding_dimension(const Cone& c) {
  if (!c.is_full_dimensional())
    throw DomainError("embedding_dimension: dual of " + c.to_string() + " is not pointed");
  return hilbert_basis(dual_cone(c)).members.size();
}

unsigned BinomialRelation::degree() const { return std::accumulate(lhs.begin(), lhs.end(), 0u); }

namespace {

using Monomial = std::vector<unsigned>;

void monomials_of_degree(std::size_t vars, unsigned degree, std::vector<Monomial>& out) {
  Monomial m(vars, 0);
  // Enumerate compositions of `degree` into `vars` parts in lexicographic order.
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == vars) {
      m[i] = left;
      out.push_back(m);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      m[i] = k;
      rec(i + 1, left - k);
    }
    m[i] = 0;
  };
  if (vars == 0) return;
  rec(0, degree);
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<BinomialRelation> toric_relations(const Cone& c, unsigned degree_bound) {
  HilbertBasis dual = hilbert_basis(dual_cone(c));
  const auto& h = dual.members;
  const std::size_t k = h.size();
  std::vector<BinomialRelation> relations;

  for (unsigned degree = 2; degree <= degree_bound; ++degree) {
    std::vector<Monomial> monos;
    monomials_of_degree(k, degree, monos);
    std::map<LatticeVector, std::vector<std::size_t>> fibres;
    for (std::size_t i = 0; i < monos.size(); ++i) {
      LatticeVector image(c.rank());
      for (std::size_t j = 0; j < k; ++j)
        if (monos[i][j]) image += Integer(monos[i][j]) * h[j];
      fibres[image].push_back(i);
    }
    for (auto& [image, members] : fibres) {
      if (members.size() < 2) continue;
      std::map<Monomial, std::size_t> index;
      for (std::size_t i = 0; i < members.size(); ++i) index[monos[members[i]]] = i;
      UnionFind uf(members.size());
      for (std::size_t i = 0; i < members.size(); ++i) {
        const Monomial& u = monos[members[i]];
        for (const auto& rel : relations)
          for (int dir = 0; dir < 2; ++dir) {
            const Monomial& from = dir ? rel.rhs : rel.lhs;
            const Monomial& to = dir ? rel.lhs : rel.rhs;
            Monomial v = u;
            bool divisible = true;
            for (std::size_t j = 0; j < k; ++j) {
              if (v[j] < from[j]) {
                divisible = false;
                break;
              }
              v[j] = v[j] - from[j] + to[j];
            }
            if (divisible) uf.unite(i, index.at(v));
          }
      }
      // Connect components in order of their smallest monomial.
      std::map<std::size_t, Monomial> component_min;
      for (std::size_t i = 0; i < members.size(); ++i) {
        std::size_t root = uf.find(i);
        const Monomial& m = monos[members[i]];
        auto it = component_min.find(root);
        if (it == component_min.end() || m < it->second) component_min[root] = m;
      }
      std::vector<Monomial> reps;
      for (auto& [root, m] : component_min) reps.push_back(m);
      std::sort(reps.begin(), reps.end());
      for (std::size_t i = 1; i < reps.size(); ++i) relations.push_back({reps[i - 1], reps[i]});
    }
  }
  return relations;
}

}  // namespace toric
