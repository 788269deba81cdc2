#include "toric/resolve2d.hpp"

#include <algorithm>

#include "toric/polytope.hpp"

namespace toric {

Rational CFExpansion::value() const {
  if (terms.empty()) return Rational(0);
  Rational x(terms.back());
  for (std::size_t i = terms.size() - 1; i-- > 0;) {
    x = Rational(terms[i]) - 1 / x;
    x.canonicalize();
  }
  return x;
}

CFExpansion cf_expansion(const Integer& p, const Integer& q) {
  if (!(q > 0 && q < p) || gcd(p, q) != 1)
    throw DomainError("cf_expansion: need 0 < q < p coprime, got p=" + p.get_str() + ", q=" + q.get_str());
  CFExpansion cf{p, q, {}};
  Integer a = p, b = q;
  while (b != 0) {
    Integer t;
    mpz_cdiv_q(t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    cf.terms.push_back(t);
    Integer next = t * b - a;
    a = b;
    b = next;
  }
  return cf;
}

namespace {

void require_rank2(const Cone& c, const char* who) {
  if (c.rank() != 2 || !c.is_full_dimensional())
    throw DomainError(std::string(who) + ": " + c.to_string() + " is not a full-dimensional rank-2 cone");
}

}  // namespace

MinimalResolution minimal_resolution(const Cone& c) {
  require_rank2(c, "minimal_resolution");
  LatticeVector u0 = c.rays()[0], u1 = c.rays()[1];
  const LatticeVector origin{0, 0};
  const int sign = orientation(origin, u0, u1) > 0 ? 1 : -1;

  // Candidates: lattice points of the parallelogram [0,1]u0 + [0,1]u1, minus 0.
  std::vector<LatticeVector> pts;
  for (auto& p : LatticePolytope::hull({origin, u0, u1, u0 + u1}).lattice_points())
    if (!p.is_zero()) pts.push_back(std::move(p));
  // Angular order from u0 to u1; on a common ray keep the shortest point.
  std::sort(pts.begin(), pts.end(), [&](const LatticeVector& a, const LatticeVector& b) {
    Integer o = sign * orientation(origin, a, b);
    if (o != 0) return o > 0;
    return abs(a[0]) + abs(a[1]) < abs(b[0]) + abs(b[1]);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [&](const LatticeVector& a, const LatticeVector& b) { return orientation(origin, a, b) == 0; }),
            pts.end());

  // Boundary chain of the convex hull facing the origin.
  std::vector<LatticeVector> chain;
  for (const auto& p : pts) {
    while (chain.size() >= 2) {
      const auto& a = chain[chain.size() - 2];
      const auto& b = chain.back();
      // b survives iff it lies strictly between a–p and the origin.
      Integer side_b = orientation(a, p, b), side_0 = orientation(a, p, origin);
      if (sgn(side_b) != 0 && sgn(side_b) == sgn(side_0)) break;
      chain.pop_back();
    }
    chain.push_back(p);
  }

  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    auto seg = segment_points(chain[i], chain[i + 1]);
    rays.insert(rays.end(), seg.begin(), seg.end() - 1);
  }
  rays.push_back(chain.back());

  MinimalResolution res;
  std::vector<Cone> cones;
  for (std::size_t i = 0; i + 1 < rays.size(); ++i) {
    cones.push_back(make_cone({rays[i], rays[i + 1]}));
    if (!is_basic(cones.back())) throw std::logic_error("minimal_resolution: non-basic cone " + cones.back().to_string());
  }
  for (std::size_t i = 1; i + 1 < rays.size(); ++i) {
    LatticeVector s = rays[i - 1] + rays[i + 1];
    const LatticeVector& u = rays[i];
    std::size_t k = u[0] != 0 ? 0 : 1;
    if (s[k] % u[k] != 0) throw std::logic_error("minimal_resolution: three-term relation fails at " + u.to_string());
    Integer b = s[k] / u[k];
    if (b * u != s) throw std::logic_error("minimal_resolution: three-term relation fails at " + u.to_string());
    res.exceptional.push_back({u, -b});
  }
  res.fan = make_fan(std::move(cones), 2);
  return res;
}

std::pair<Integer, Integer> cyclic_quotient_type(const Cone& c) {
  require_rank2(c, "cyclic_quotient_type");
  const LatticeVector& u0 = c.rays()[0];
  const LatticeVector& u1 = c.rays()[1];
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), u0[0].get_mpz_t(), u0[1].get_mpz_t());
  // A = [[−b, a], [s, t]] sends u0 = (a, b) to (0, 1).
  Integer x = -u0[1] * u1[0] + u0[0] * u1[1];
  Integer y = s * u1[0] + t * u1[1];
  if (x < 0) x = -x;
  // Shear (x, y) ↦ (x, y + k x) to bring y into (−p, 0].
  Integer q = -y;
  mpz_fdiv_r(q.get_mpz_t(), q.get_mpz_t(), x.get_mpz_t());
  return {x, q};
}

}  // namespace toric
