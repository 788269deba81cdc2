#include "toric/resolve3d.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "toric/hilbert.hpp"
#include "toric/simplex.hpp"

namespace toric {

namespace {

Cone cone_over_cell(const LatticePolytope& cell) {
  std::vector<LatticeVector> lifted;
  for (const auto& v : cell.vertices()) lifted.push_back(lift_to_height_one(v));
  return make_cone_in_rank(lifted, 3);
}

template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
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

// ---- rational polygons -------------------------------------------------

using RPoint = std::array<Rational, 2>;

Rational eval(const LatticeVector& l, const RPoint& p) { return l[0] * p[0] + l[1] * p[1] + l[2]; }

// {p ∈ poly : l(p) ≤ 0} for a convex polygon given in cyclic order.
std::vector<RPoint> clip(const std::vector<RPoint>& poly, const LatticeVector& l) {
  std::vector<RPoint> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const RPoint& p = poly[i];
    const RPoint& q = poly[(i + 1) % n];
    Rational sp = eval(l, p), sq = eval(l, q);
    if (sp <= 0) out.push_back(p);
    if ((sp < 0 && sq > 0) || (sp > 0 && sq < 0)) {
      Rational s = sp / (sp - sq);
      out.push_back({p[0] + s * (q[0] - p[0]), p[1] + s * (q[1] - p[1])});
    }
  }
  std::vector<RPoint> dedup;
  for (auto& p : out)
    if (dedup.empty() || dedup.back() != p) dedup.push_back(std::move(p));
  while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
  return dedup;
}

Rational twice_area(const std::vector<RPoint>& poly) {
  Rational s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const RPoint& p = poly[i];
    const RPoint& q = poly[(i + 1) % poly.size()];
    s += p[0] * q[1] - p[1] * q[0];
  }
  return s;
}

LatticePolytope to_lattice_polygon(const std::vector<RPoint>& poly) {
  std::vector<LatticeVector> pts;
  for (const auto& p : poly) {
    if (p[0].get_den() != 1 || p[1].get_den() != 1)
      throw std::logic_error("order function domain has a non-lattice vertex");
    pts.push_back(LatticeVector(std::vector<Integer>{p[0].get_num(), p[1].get_num()}));
  }
  return LatticePolytope::hull(pts);
}

struct Domain {
  LatticeVector m;
  std::vector<RPoint> region;
};

// Linearity domains of x ↦ min_m ⟨m, (x, 1)⟩ over the polygon q.
std::vector<Domain> linearity_domains(const LatticePolytope& q, const std::vector<LatticeVector>& gens) {
  std::vector<RPoint> start;
  for (const auto& v : q.vertices()) start.push_back({Rational(v[0]), Rational(v[1])});
  std::vector<Domain> out;
  for (const auto& m : gens) {
    std::vector<RPoint> region = start;
    for (const auto& other : gens) {
      if (other == m || region.empty()) continue;
      region = clip(region, m - other);
    }
    if (!region.empty()) out.push_back({m, std::move(region)});
  }
  return out;
}

std::vector<LatticePolytope> cells_of(const std::vector<Domain>& domains) {
  std::vector<LatticePolytope> cells;
  for (const auto& d : domains)
    if (d.region.size() >= 3 && twice_area(d.region) != 0) cells.push_back(to_lattice_polygon(d.region));
  return cells;
}

std::vector<LatticeVector> dual_hilbert(const LatticePolytope& cell) {
  return hilbert_basis(dual_cone(cone_over_cell(cell))).members;
}

// The facet normal of τ_Q belonging to the edge [a, b].
LatticeVector edge_normal(const std::vector<LatticeVector>& hilb, const LatticeVector& a, const LatticeVector& b) {
  for (const auto& h : hilb)
    if (dot(h, lift_to_height_one(a)) == 0 && dot(h, lift_to_height_one(b)) == 0) return h;
  throw std::logic_error("edge_normal: no facet normal found");
}

std::vector<std::pair<LatticeVector, LatticeVector>> singular_edges(const LatticePolytope& cell) {
  std::vector<std::pair<LatticeVector, LatticeVector>> out;
  for (const auto& [a, b] : cell.edges())
    if ((b - a).content() > 1) out.emplace_back(a, b);
  return out;
}

std::vector<LatticeVector> new_vertices(const PolygonComplex& before, const PolygonComplex& after) {
  auto old = before.vertices();
  std::vector<LatticeVector> out;
  for (const auto& v : after.vertices())
    if (!std::binary_search(old.begin(), old.end(), v)) out.push_back(v);
  return out;
}

std::size_t total_interior_points(const PolygonComplex& pc) { return pc.census().interior_points; }

}  // namespace

// ---- canonical modification and polygon form --------------------------------

Fan canonical_modification(const Cone& c) {
  if (!c.is_full_dimensional() || c.rank() > 3)
    throw DomainError("canonical_modification: " + c.to_string() + " is not full-dimensional of rank ≤ 3");
  if (classify(c).canonical) return make_fan({c}, c.rank());

  const std::size_t r = c.rank();
  auto hilb = hilbert_basis(c).members;
  std::set<std::vector<Rational>> seen;
  std::vector<Cone> cones;
  for_each_subset(hilb.size(), r, [&](const std::vector<std::size_t>& idx) {
    std::vector<LatticeVector> sub;
    for (auto i : idx) sub.push_back(hilb[i]);
    if (rank_of(sub) < r) return;
    std::vector<Rational> ones(r, Rational(1));
    auto sol = solve_rational(sub, ones);
    if (!sol) return;
    Covector m(*sol);
    std::vector<LatticeVector> face;
    for (const auto& h : hilb) {
      Rational v = m.pair(h);
      if (v < 1) return;
      if (v == 1) face.push_back(h);
    }
    if (!seen.insert(*sol).second) return;
    cones.push_back(make_cone_in_rank(face, r));
  });
  Fan f = make_fan(std::move(cones), r);
  if (!f.has_support(c)) throw std::logic_error("canonical_modification: pieces do not cover " + c.to_string());
  return f;
}

LatticeVector PolygonForm::to_ambient(const LatticeVector& point) const {
  return inverse.apply(lift_to_height_one(point));
}

Cone PolygonForm::cone_over(const LatticePolytope& cell) const {
  std::vector<LatticeVector> gens;
  for (const auto& v : cell.vertices()) gens.push_back(to_ambient(v));
  return make_cone_in_rank(gens, 3);
}

PolygonForm polygon_form(const Cone& c) {
  if (c.rank() != 3 || !c.is_full_dimensional())
    throw DomainError("polygon_form: " + c.to_string() + " is not a full-dimensional rank-3 cone");
  auto gd = gorenstein_data(c);
  if (!gd || gd->index != 1) throw DomainError("polygon_form: " + c.to_string() + " is not Gorenstein");
  LatticeVector m = gd->m.scaled_to_integral();

  PolygonForm form;
  if (m == LatticeVector{0, 0, 1}) {
    form.map = IntMatrix::identity(3);
  } else {
    // p·m·q = (1, 0, 0): the rows of q⁻¹ form a basis with first row ±m.
    SmithForm s = smith_normal_form(IntMatrix::from_rows(std::vector<LatticeVector>{m}, 3));
    IntMatrix qi = unimodular_inverse(s.q);
    form.map = IntMatrix::from_rows(std::vector<LatticeVector>{qi.row(1), qi.row(2), m}, 3);
  }
  form.inverse = unimodular_inverse(form.map);
  std::vector<LatticeVector> pts;
  for (const auto& g : c.rays()) {
    LatticeVector x = form.map.apply(g);
    if (x[2] != 1) throw std::logic_error("polygon_form: generator off the height-one plane");
    pts.push_back(LatticeVector(std::vector<Integer>{x[0], x[1]}));
  }
  form.polygon = LatticePolytope::hull(pts);
  return form;
}

// ---- polygon complexes ----------------------------------------------------

PolygonComplex::PolygonComplex(LatticePolytope polygon) : polygon_(polygon), cells_{std::move(polygon)} {
  if (polygon_.ambient_rank() != 2 || polygon_.dim() != 2)
    throw DomainError("PolygonComplex: " + polygon_.to_string() + " is not a lattice polygon");
}

PolygonComplex::PolygonComplex(LatticePolytope polygon, std::vector<LatticePolytope> cells)
    : polygon_(std::move(polygon)), cells_(std::move(cells)) {
  if (polygon_.ambient_rank() != 2 || polygon_.dim() != 2)
    throw DomainError("PolygonComplex: " + polygon_.to_string() + " is not a lattice polygon");
  std::sort(cells_.begin(), cells_.end());
  if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
    throw DomainError("PolygonComplex: repeated cell");
  Integer area = 0;
  for (const auto& c : cells_) {
    if (c.ambient_rank() != 2 || c.dim() != 2) throw DomainError("PolygonComplex: degenerate cell " + c.to_string());
    for (const auto& v : c.vertices())
      if (!polygon_.contains(v)) throw DomainError("PolygonComplex: cell " + c.to_string() + " leaves the polygon");
    area += c.twice_area();
  }
  if (area != polygon_.twice_area()) throw DomainError("PolygonComplex: cells do not tile the polygon");
  const auto verts = vertices();
  for (const auto& c : cells_)
    for (const auto& v : verts)
      if (c.contains(v) && std::find(c.vertices().begin(), c.vertices().end(), v) == c.vertices().end())
        throw DomainError("PolygonComplex: vertex " + v.to_string() + " meets cell " + c.to_string() +
                          " outside its vertices");
  // Boundary edges bound one cell, interior edges two cells on opposite sides.
  std::map<std::pair<LatticeVector, LatticeVector>, std::vector<int>> sides;
  for (const auto& c : cells_) {
    const auto& vs = c.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const auto& a = vs[i];
      const auto& b = vs[(i + 1) % vs.size()];
      auto e = std::minmax(a, b);
      sides[e].push_back(sgn(orientation(e.first, e.second, vs[(i + 2) % vs.size()])));
    }
  }
  const auto outer = polygon_.edges();
  for (const auto& [e, s] : sides) {
    bool boundary = std::any_of(outer.begin(), outer.end(), [&](const auto& f) {
      return orientation(f.first, f.second, e.first) == 0 && orientation(f.first, f.second, e.second) == 0;
    });
    if (boundary ? s.size() != 1 : s.size() != 2 || s[0] == s[1])
      throw DomainError("PolygonComplex: cells overlap along " + e.first.to_string() + e.second.to_string());
  }
}

std::vector<LatticeVector> PolygonComplex::vertices() const {
  std::vector<LatticeVector> out;
  for (const auto& c : cells_) out.insert(out.end(), c.vertices().begin(), c.vertices().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CellCensus PolygonComplex::cell_census(std::size_t i) const {
  const auto& c = cells_.at(i);
  return CellCensus{c.interior_points().size(), c.edge_interior_points().size(), c.is_basic_triangle(),
                    c.is_unit_parallelogram()};
}

ComplexCensus PolygonComplex::census() const {
  ComplexCensus s;
  s.cells = cells_.size();
  std::set<LatticeVector> edge_pts;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    CellCensus c = cell_census(i);
    if (c.interior_points) ++s.cells_with_interior_points;
    s.interior_points += c.interior_points;
    if (c.basic) ++s.basic_cells;
    if (c.unit_parallelogram) ++s.unit_parallelograms;
    for (auto& p : cells_[i].edge_interior_points()) edge_pts.insert(std::move(p));
  }
  s.edge_points = edge_pts.size();
  return s;
}

Fan PolygonComplex::fan() const {
  std::vector<Cone> cones;
  for (const auto& c : cells_) cones.push_back(cone_over_cell(c));
  return make_fan(std::move(cones), 3);
}

// ---- phase (iii) ------------------------------------------------------------

PolygonComplex blowup_fixed_point(const PolygonComplex& pc, std::size_t cell, CentralCellCheck* check) {
  const LatticePolytope& q = pc.cells().at(cell);
  auto interior = q.interior_points();
  if (interior.empty()) throw DomainError("blowup_fixed_point: cell " + q.to_string() + " is already cDV");

  auto domains = linearity_domains(q, dual_hilbert(q));
  if (check) {
    check->cell = q;
    check->interior_hull = LatticePolytope::hull(interior);
    auto central = std::find_if(domains.begin(), domains.end(),
                                [](const Domain& d) { return d.m == LatticeVector{0, 0, 1}; });
    if (central == domains.end()) throw std::logic_error("blowup_fixed_point: no central domain");
    check->central = to_lattice_polygon(central->region);
    check->matches = check->central == check->interior_hull;
  }

  std::vector<LatticePolytope> cells;
  for (std::size_t i = 0; i < pc.cells().size(); ++i)
    if (i != cell) cells.push_back(pc.cells()[i]);
  for (auto& c : cells_of(domains)) cells.push_back(std::move(c));
  return PolygonComplex(pc.polygon(), std::move(cells));
}

PolygonComplex crepant_fixed_point_phase(const PolygonComplex& pc, std::vector<PhaseRound>* rounds,
                                         const CellOrder& order) {
  PolygonComplex cur = pc;
  while (true) {
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < cur.cells().size(); ++i)
      if (cur.cell_census(i).interior_points) eligible.push_back(i);
    if (eligible.empty()) break;
    if (order) order(eligible);

    PhaseRound round;
    PolygonComplex next = cur;
    for (auto i : eligible) {
      const LatticePolytope& q = cur.cells()[i];
      auto pos = std::find(next.cells().begin(), next.cells().end(), q) - next.cells().begin();
      CentralCellCheck check;
      next = blowup_fixed_point(next, static_cast<std::size_t>(pos), &check);
      round.centers.push_back(q);
      round.central_cells.push_back(std::move(check));
    }
    if (total_interior_points(next) >= total_interior_points(cur))
      throw std::logic_error("crepant_fixed_point_phase: interior points did not decrease");
    std::sort(round.centers.begin(), round.centers.end());
    std::sort(round.central_cells.begin(), round.central_cells.end(),
              [](const CentralCellCheck& a, const CentralCellCheck& b) { return a.cell < b.cell; });
    round.new_points = new_vertices(cur, next);
    round.after = next;
    if (rounds) rounds->push_back(std::move(round));
    cur = std::move(next);
  }
  return cur;
}

// ---- phase (iv) -------------------------------------------------------------

PolygonComplex blowup_curve_phase(const PolygonComplex& pc, std::vector<PhaseRound>* rounds) {
  for (std::size_t i = 0; i < pc.cells().size(); ++i)
    if (pc.cell_census(i).interior_points)
      throw DomainError("blowup_curve_phase: cell " + pc.cells()[i].to_string() + " has interior points; run phase (iii) first");

  PolygonComplex cur = pc;
  while (true) {
    PhaseRound round;
    std::vector<LatticePolytope> cells;
    bool any = false;
    for (const auto& q : cur.cells()) {
      auto sing = singular_edges(q);
      if (sing.empty()) {
        cells.push_back(q);
        continue;
      }
      any = true;
      // Generators of the ideal of the union of the curves over the singular edges.
      auto hilb = dual_hilbert(q);
      std::vector<LatticeVector> normals;
      for (const auto& [a, b] : sing) {
        normals.push_back(edge_normal(hilb, a, b));
        round.centers.push_back(LatticePolytope::hull({a, b}));
      }
      std::set<LatticeVector> gens;
      for (const auto& h : hilb)
        if (std::find(normals.begin(), normals.end(), h) == normals.end()) gens.insert(h);
      for (std::size_t i = 0; i < normals.size(); ++i)
        for (std::size_t j = i + 1; j < normals.size(); ++j) gens.insert(normals[i] + normals[j]);
      for (auto& c : cells_of(linearity_domains(q, std::vector<LatticeVector>(gens.begin(), gens.end()))))
        cells.push_back(std::move(c));
    }
    if (!any) break;
    PolygonComplex next(cur.polygon(), std::move(cells));
    if (next.census().edge_points >= cur.census().edge_points)
      throw std::logic_error("blowup_curve_phase: edge points did not decrease");
    std::sort(round.centers.begin(), round.centers.end());
    round.centers.erase(std::unique(round.centers.begin(), round.centers.end()), round.centers.end());
    round.new_points = new_vertices(cur, next);
    round.after = next;
    if (rounds) rounds->push_back(std::move(round));
    cur = std::move(next);
  }
  return cur;
}

// ---- phase (v) --------------------------------------------------------------

std::size_t completion_count(const PolygonComplex& pc) {
  std::size_t k = 0;
  for (const auto& c : pc.cells()) {
    if (c.is_basic_triangle()) continue;
    if (c.is_unit_parallelogram()) {
      ++k;
      continue;
    }
    throw DomainError("completions: cell " + c.to_string() + " is neither a basic triangle nor a unit parallelogram");
  }
  return k;
}

ProjectivityCertificate certify_projective(const PolygonComplex& tri) {
  for (const auto& c : tri.cells())
    if (c.vertices().size() != 3) throw DomainError("certify_projective: cell " + c.to_string() + " is not a triangle");
  const auto pts = tri.vertices();
  auto index_of = [&](const LatticeVector& p) {
    return static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), p) - pts.begin());
  };
  const std::size_t n = pts.size();

  // One constraint per interior edge: the affine extension of one triangle
  // lies at least t above h at the opposite vertex of its neighbour.
  std::map<std::pair<LatticeVector, LatticeVector>, std::vector<std::size_t>> walls;
  for (std::size_t i = 0; i < tri.cells().size(); ++i)
    for (const auto& [a, b] : tri.cells()[i].edges()) walls[std::minmax(a, b)].push_back(i);

  LinearProgram lp;
  lp.c.assign(n + 1, Rational(0));
  lp.c[n] = 1;
  for (const auto& [edge, cells] : walls) {
    if (cells.size() != 2) continue;
    const auto& t1 = tri.cells()[cells[0]].vertices();
    const auto& t2 = tri.cells()[cells[1]].vertices();
    LatticeVector d = *std::find_if(t2.begin(), t2.end(), [&](const LatticeVector& v) {
      return std::find(t1.begin(), t1.end(), v) == t1.end();
    });
    // λ with Σ λ_i (t1_i, 1) = (d, 1).
    std::vector<LatticeVector> rows(3, LatticeVector(3));
    for (std::size_t i = 0; i < 3; ++i) {
      LatticeVector l = lift_to_height_one(t1[i]);
      for (std::size_t k = 0; k < 3; ++k) rows[k][i] = l[k];
    }
    LatticeVector dl = lift_to_height_one(d);
    std::vector<Rational> rhs(dl.begin(), dl.end());
    auto lambda = solve_rational(rows, rhs);
    std::vector<Rational> row(n + 1, Rational(0));
    row[index_of(d)] += 1;
    for (std::size_t i = 0; i < 3; ++i) row[index_of(t1[i])] -= (*lambda)[i];
    row[n] = 1;
    lp.a.push_back(std::move(row));
    lp.b.emplace_back(0);
  }
  std::vector<Rational> cap(n + 1, Rational(0));
  cap[n] = 1;
  lp.a.push_back(std::move(cap));
  lp.b.emplace_back(1);

  LPSolution sol = maximize(lp);
  ProjectivityCertificate cert;
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) scale = lcm(scale, sol.x[i].get_den());
  for (std::size_t i = 0; i < n; ++i) {
    Rational h = sol.x[i] * scale;
    cert.heights[pts[i]] = h.get_num();
  }
  Fan f = tri.fan();
  cert.support = SupportFunction{f, {}, std::nullopt};
  for (const auto& [p, h] : cert.heights) cert.support.ray_values[lift_to_height_one(p)] = h;
  cert.support = with_linear_representatives(std::move(cert.support));
  cert.verified = sol.bounded && sol.value > 0 && is_strictly_upper_convex(cert.support);
  return cert;
}

Completion completion(const PolygonComplex& pc, std::size_t index) {
  const std::size_t k = completion_count(pc);
  if (k >= 63 || index >= (std::size_t{1} << k))
    throw DomainError("completion: index " + std::to_string(index) + " out of range for " + std::to_string(k) +
                      " parallelograms");
  Completion out;
  out.index = index;
  std::vector<LatticePolytope> cells;
  std::size_t j = 0;
  for (const auto& c : pc.cells()) {
    if (!c.is_unit_parallelogram()) {
      cells.push_back(c);
      continue;
    }
    const auto& v = c.vertices();
    auto d0 = std::minmax(v[0], v[2]);
    auto d1 = std::minmax(v[1], v[3]);
    bool first_is_smaller = d0 < d1;
    bool flip = (index >> j) & 1U;
    out.diagonals.push_back(flip);
    ++j;
    bool use_02 = first_is_smaller != flip;
    if (use_02) {
      cells.push_back(LatticePolytope::hull({v[0], v[1], v[2]}));
      cells.push_back(LatticePolytope::hull({v[0], v[2], v[3]}));
    } else {
      cells.push_back(LatticePolytope::hull({v[1], v[2], v[3]}));
      cells.push_back(LatticePolytope::hull({v[1], v[3], v[0]}));
    }
  }
  out.triangulation = PolygonComplex(pc.polygon(), std::move(cells));
  out.certificate = certify_projective(out.triangulation);
  out.fan = out.certificate.support.fan;
  return out;
}

std::vector<Completion> completions(const PolygonComplex& pc) {
  const std::size_t k = completion_count(pc);
  if (k >= 20) throw DomainError("completions: 2^" + std::to_string(k) + " completions is too many to enumerate");
  std::vector<Completion> out;
  for (std::size_t i = 0; i < (std::size_t{1} << k); ++i) out.push_back(completion(pc, i));
  return out;
}

// ---- the pipeline -------------------------------------------------------------

const char* to_string(Phase p) {
  switch (p) {
    case Phase::canonical: return "canonical";
    case Phase::fixed_point_blowup: return "fixed-point-blow-up";
    case Phase::curve_blowup: return "curve-blow-up";
    case Phase::completion: return "completion";
  }
  return "?";
}

namespace {

Fan ambient_fan(const PolygonForm& form, const PolygonComplex& pc) {
  std::vector<Cone> cones;
  for (const auto& c : pc.cells()) cones.push_back(form.cone_over(c));
  return make_fan(std::move(cones), 3);
}

TraceStep step_for(Phase phase, std::size_t piece, bool in_cover, const Cone& base, const PolygonForm& form,
                   const PhaseRound& round) {
  TraceStep s;
  s.phase = phase;
  s.piece = piece;
  s.in_cover = in_cover;
  for (const auto& c : round.centers) {
    std::vector<LatticeVector> gens;
    for (const auto& v : c.vertices()) gens.push_back(form.to_ambient(v));
    s.centers.push_back(make_cone_in_rank(gens, 3));
  }
  for (const auto& p : round.new_points) s.new_rays.push_back(form.to_ambient(p));
  std::sort(s.new_rays.begin(), s.new_rays.end());
  s.discrepancies = discrepancies(base, ambient_fan(form, round.after));
  s.census = round.after.census();
  s.central_cells = round.central_cells;
  return s;
}

}  // namespace

ResolutionResult resolve(const Cone& c) {
  if (c.rank() != 3 || !c.is_full_dimensional())
    throw DomainError("resolve: " + c.to_string() + " is not a full-dimensional rank-3 cone");
  ResolutionResult result;

  Fan canon = canonical_modification(c);
  if (canon.maximal_cones().size() != 1 || canon.maximal_cones().front() != c) {
    TraceStep s;
    s.phase = Phase::canonical;
    s.centers.push_back(c);
    for (const auto& r : canon.rays())
      if (!c.has_ray(r)) s.new_rays.push_back(r);
    if (gorenstein_data(c)) s.discrepancies = discrepancies(c, canon);
    result.trace.push_back(std::move(s));
  }

  std::vector<Cone> cones;
  std::vector<std::size_t> deferred;
  for (std::size_t i = 0; i < canon.maximal_cones().size(); ++i) {
    const Cone& piece = canon.maximal_cones()[i];
    ResolvedPiece rp;
    rp.cone = piece;
    rp.gorenstein = gorenstein_data(piece);
    Cone work = piece;
    bool in_cover = false;
    if (!is_basic(piece)) {
      if (!rp.gorenstein) throw std::logic_error("resolve: piece " + piece.to_string() + " is not Q-Gorenstein");
      if (rp.gorenstein->index > 1) {
        rp.cover = index_one_cover(piece);
        work = rp.cover->cone;
        in_cover = true;
      }
    }

    if (is_basic(work)) {
      rp.fan = make_fan({work}, 3);
    } else {
      PolygonForm form = polygon_form(work);
      std::vector<PhaseRound> r3, r4;
      PolygonComplex pc = crepant_fixed_point_phase(PolygonComplex(form.polygon), &r3);
      pc = blowup_curve_phase(pc, &r4);
      for (const auto& round : r3)
        result.trace.push_back(step_for(Phase::fixed_point_blowup, i, in_cover, work, form, round));
      for (const auto& round : r4)
        result.trace.push_back(step_for(Phase::curve_blowup, i, in_cover, work, form, round));

      Completion comp = completion(pc, 0);
      if (!comp.diagonals.empty()) {
        PhaseRound round;
        for (const auto& cell : pc.cells())
          if (cell.is_unit_parallelogram()) round.centers.push_back(cell);
        round.after = comp.triangulation;
        result.trace.push_back(step_for(Phase::completion, i, in_cover, work, form, round));
      }
      rp.fan = ambient_fan(form, comp.triangulation);
      rp.form = std::move(form);
      rp.complex = comp.triangulation;
      rp.certificate = std::move(comp.certificate);
    }

    if (in_cover) {
      deferred.push_back(i);
    } else {
      cones.insert(cones.end(), rp.fan.maximal_cones().begin(), rp.fan.maximal_cones().end());
    }
    result.pieces.push_back(std::move(rp));
  }

  // Pieces resolved only in a cover stay in the N-fan, subdivided at the
  // rays their neighbours placed on common faces.
  std::set<LatticeVector> placed;
  for (const auto& cone : cones) placed.insert(cone.rays().begin(), cone.rays().end());
  for (auto i : deferred) {
    const Cone& piece = canon.maximal_cones()[i];
    Fan f = make_fan({piece}, 3);
    for (const auto& v : placed)
      if (piece.contains(v) && !piece.has_ray(v)) f = star_subdivision(f, v);
    cones.insert(cones.end(), f.maximal_cones().begin(), f.maximal_cones().end());
  }
  result.fan = make_fan(std::move(cones), 3);
  return result;
}

}  // namespace toric
