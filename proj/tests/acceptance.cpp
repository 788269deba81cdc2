// Acceptance run: one PASS/FAIL line per criterion, all checks exact.
//
//   acceptance            run every criterion
//   acceptance 2 5        run the listed ones

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "toric/classify.hpp"
#include "toric/divisors.hpp"
#include "toric/hilbert.hpp"
#include "toric/resolve2d.hpp"
#include "toric/resolve3d.hpp"

using namespace toric;
using oracle::Point;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

LatticeVector v(std::initializer_list<long> xs) { return LatticeVector(xs); }

std::vector<LatticeVector> sorted(std::vector<LatticeVector> vs) {
  std::sort(vs.begin(), vs.end());
  return vs;
}

Outcome two_dimensional_golden() {
  Outcome o;
  Cone c = make_cone({v({1, 0}), v({4, 5})});
  o.check(embedding_dimension(c) == 6, "embedding dimension is not 6");

  auto dual = hilbert_basis(dual_cone(c)).members;
  o.check(dual.size() == 6, "Hilb of the dual cone does not have 6 members");
  o.check(std::count(dual.begin(), dual.end(), v({0, 1})) == 1, "(0,1) missing from the dual Hilbert basis");
  o.check(std::count(dual.begin(), dual.end(), v({5, -4})) == 1, "(5,-4) missing from the dual Hilbert basis");
  for (long i = 1; i <= 4; ++i)
    o.check(std::count(dual.begin(), dual.end(), v({i, 1 - i})) == 1,
            "(" + std::to_string(i) + "," + std::to_string(1 - i) + ") missing from the dual Hilbert basis");
  o.check(oracle::from_vectors(sorted(dual)) == oracle::hilbert_basis({{0, 1}, {5, -4}}),
          "dual Hilbert basis differs from box enumeration");

  auto cf = cf_expansion(5, 4);
  o.check(cf.terms == std::vector<Integer>{2, 2, 2, 2}, "5/4 does not expand to [2,2,2,2]");

  auto res = minimal_resolution(c);
  const auto& cones = res.fan.maximal_cones();
  o.check(cones.size() == 2 && std::all_of(cones.begin(), cones.end(), [](const Cone& s) { return is_basic(s); }),
          "minimal resolution is not two basic cones");
  o.check(res.exceptional.size() == 1 && res.exceptional[0].ray == v({1, 1}), "exceptional ray is not (1,1)");
  // u0 + u2 = b u1 gives self-intersection -b
  LatticeVector sum = v({1, 0}) + v({4, 5});
  Integer b = sum[0];
  o.check(sum == b * v({1, 1}) && !res.exceptional.empty() && res.exceptional[0].self_intersection == -b && b == 5,
          "self-intersection of (1,1) is not -5");

  auto rel = toric_relations(c, 2);
  o.check(rel.size() == 10, "degree-2 relations: " + std::to_string(rel.size()) + " instead of 10");
  if (o.pass)
    o.detail << "edim 6, Hilb(dual) = {(0,1),(1,0),(2,-1),(3,-2),(4,-3),(5,-4)}, cf [2,2,2,2], "
                "E = (1,1) with E^2 = -5, 10 quadrics";
  return o;
}

Outcome three_dimensional_golden() {
  Outcome o;
  const std::vector<Point> tri{{-3, 3}, {3, 1}, {0, -3}};
  Cone c = oracle::cone_over(tri);
  auto r = classify(c);
  o.check(r.gorenstein && r.q_gorenstein && r.q_gorenstein->index == 1, "not Gorenstein of index 1");
  o.check(embedding_dimension(c) == 14, "embedding dimension " + std::to_string(embedding_dimension(c)));
  o.check(lri_general_section(c) == 13, "LRI is not 13");

  PolygonForm form = polygon_form(c);
  o.check(form.map == IntMatrix::identity(3), "polygon form is not the identity");
  CentralCellCheck check;
  blowup_fixed_point(PolygonComplex(form.polygon), 0, &check);
  auto pentagon = LatticePolytope::hull({v({-2, 2}), v({-1, 2}), v({2, 1}), v({2, 0}), v({0, -2})});
  o.check(check.central == pentagon, "central cell is " + check.central.to_string());

  PolygonComplex pc = blowup_curve_phase(crepant_fixed_point_phase(PolygonComplex(form.polygon)));
  std::size_t squares = 0, others = 0;
  for (const auto& cell : pc.cells()) {
    if (cell.is_unit_parallelogram()) ++squares;
    else if (!cell.is_basic_triangle()) ++others;
  }
  o.check(squares == 3 && others == 0,
          std::to_string(squares) + " unit parallelograms and " + std::to_string(others) + " other non-basic cells");
  auto all = completions(pc);
  o.check(all.size() == 8, std::to_string(all.size()) + " completions");
  o.check(std::all_of(all.begin(), all.end(), [](const Completion& k) { return k.certificate.verified; }),
          "a completion is not certified projective");

  auto res = resolve(c);
  const auto points = oracle::polygon_points(tri).size();
  const auto area = static_cast<std::size_t>(oracle::twice_area(tri));
  o.check(points == 19 && area == 30, "Pick/shoelace census is not 19 points, area 30");
  o.check(res.fan.rays().size() == points, std::to_string(res.fan.rays().size()) + " rays");
  o.check(res.fan.maximal_cones().size() == area && res.fan.is_basic(),
          std::to_string(res.fan.maximal_cones().size()) + " maximal cones");
  if (o.pass)
    o.detail << "index 1, edim 14, LRI 13, pentagonal central cell, 3 parallelograms, 8/8 certified, 19 rays, 30 basic cones";
  return o;
}

Outcome crepancy_suite() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  auto maps = oracle::unimodular_3x3(rng, 50);
  std::size_t added = 0;
  for (int i = 0; i < 50 && o.pass; ++i) {
    auto hull = oracle::random_polygon(rng, 4);
    std::vector<LatticeVector> gens;
    for (const auto& p : hull) gens.push_back(oracle::to_vector(oracle::apply(maps[i], {p[0], p[1], 1})));
    Cone c = make_cone(gens);
    auto g = gorenstein_data(c);
    o.check(g && g->index == 1, c.to_string() + " is not Gorenstein");
    if (!g) continue;
    auto res = resolve(c);
    for (const auto& ray : res.fan.rays()) {
      if (c.has_ray(ray)) continue;
      ++added;
      o.check(g->m.pair(ray) == 1, c.to_string() + ": added ray " + ray.to_string() + " off the plane m = 1");
    }
    for (const auto& step : res.trace)
      if (step.discrepancies) o.check(step.discrepancies->is_crepant(), c.to_string() + ": non-crepant step");
    auto rep = discrepancies(c, res.fan);
    o.check(rep.is_crepant(), c.to_string() + ": resolution is not crepant");
    o.check(std::all_of(rep.entries.begin(), rep.entries.end(), [](const auto& e) { return e.discrepancy == 0; }),
            c.to_string() + ": nonzero discrepancy");
  }
  if (o.pass) o.detail << "50 cones, " << added << " exceptional rays, all discrepancies 0";
  return o;
}

Outcome hilbert_suite() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-6, 6);
  std::size_t done = 0, members = 0;
  while (done < 100 && o.pass) {
    const std::size_t rank = done < 10 ? 1 : done < 45 ? 2 : 3;
    std::uniform_int_distribution<std::size_t> count(rank, rank + 1);
    std::vector<Point> gens(count(rng));
    for (auto& g : gens) {
      g.assign(rank, 0);
      for (auto& x : g) x = coord(rng);
    }
    Cone c;
    try {
      c = make_cone_in_rank(oracle::to_vectors(gens), rank);
    } catch (const DomainError&) {
      continue;  // not pointed
    }
    if (!c.is_full_dimensional()) continue;
    ++done;
    auto lib = oracle::from_vectors(hilbert_basis(c).members);
    std::sort(lib.begin(), lib.end());
    auto ref = oracle::hilbert_basis(gens);
    o.check(lib == ref, "Hilbert basis of " + c.to_string() + " differs from box enumeration");
    auto normals = oracle::facet_normals(gens);
    for (const auto& h : lib)
      for (const auto& k : lib) {
        if (h == k) continue;
        Point d(rank);
        for (std::size_t i = 0; i < rank; ++i) d[i] = h[i] - k[i];
        o.check(!oracle::in_cone(normals, d), "Hilbert basis of " + c.to_string() + " is not minimal");
      }
    members += lib.size();
  }
  if (o.pass) o.detail << done << " cones, " << members << " members, equal to box enumeration and minimal";
  return o;
}

Outcome classifier_consistency() {
  Outcome o;
  std::vector<Point> grid;
  for (int x = 0; x <= 3; ++x)
    for (int y = 0; y <= 3; ++y) grid.push_back({x, y});
  std::set<std::vector<Point>> seen;
  std::size_t triangles = 0, quads = 0;
  const std::size_t n = grid.size();
  std::vector<bool> pick(n);
  for (std::size_t k : {3u, 4u}) {
    std::fill(pick.begin(), pick.end(), false);
    std::fill(pick.end() - static_cast<long>(k), pick.end(), true);
    do {
      std::vector<Point> pts;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) pts.push_back(grid[i]);
      auto hull = oracle::convex_hull(pts);
      if (hull.size() != k || !seen.insert(hull).second) continue;
      (k == 3 ? triangles : quads)++;
      Cone c = oracle::cone_over(hull);
      auto r = classify(c);
      const std::string name = c.to_string();
      const bool elementary = oracle::polygon_points(hull).size() == hull.size();
      const bool basic = k == 3 && oracle::twice_area(hull) == 1;
      o.check((r.terminal && r.gorenstein) == elementary, name + ": terminal Gorenstein vs elementary");
      o.check(is_elementary(oracle::polygon(hull)) == elementary, name + ": is_elementary");
      o.check(r.smooth == basic, name + ": smooth vs basic");
      o.check(r.q_factorial == (k == 3), name + ": Q-factorial vs simplicial");
      o.check(r.gorenstein && r.q_gorenstein && r.q_gorenstein->index == 1, name + ": height-one cone not Gorenstein");
      o.check(!r.smooth || (r.q_factorial && r.gorenstein && r.terminal), name + ": smooth implications");
      o.check(!r.terminal || r.canonical, name + ": terminal without canonical");
      o.check(!r.canonical || r.log_terminal, name + ": canonical without log-terminal");
      o.check(!r.gorenstein || r.q_gorenstein, name + ": Gorenstein without m_sigma");
      o.check(!r.lci || !*r.lci || r.gorenstein, name + ": lci without Gorenstein");
      o.check(!r.smooth || (r.lci && *r.lci), name + ": smooth but not lci");
      o.check(r.rational && r.embedding_dim && *r.embedding_dim >= 3, name + ": embedding dimension");
      o.check(!r.embedding_dim || (*r.embedding_dim == 3) == r.smooth, name + ": edim 3 vs smooth");
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  if (o.pass) o.detail << triangles << " triangles and " << quads << " quadrilaterals";
  return o;
}

Outcome nakajima_spot_checks() {
  Outcome o;
  struct Case {
    const char* name;
    std::vector<Point> hull;
    bool expected;
  };
  const std::vector<Case> cases{{"basic triangle", {{0, 0}, {1, 0}, {0, 1}}, true},
                                {"unit square", {{0, 0}, {1, 0}, {1, 1}, {0, 1}}, true},
                                {"conv{(0,0),(2,0),(0,2)}", {{0, 0}, {2, 0}, {0, 2}}, false}};
  for (const auto& k : cases) {
    const bool lib = is_nakajima(oracle::polygon(k.hull));
    const bool ref = oracle::is_nakajima(k.hull);
    if (!o.detail.str().empty()) o.detail << "; ";
    o.detail << k.name << ": library " << (lib ? "yes" : "no") << ", oracle " << (ref ? "yes" : "no") << ", expected "
             << (k.expected ? "yes" : "no");
    if (lib != k.expected || ref != k.expected) o.pass = false;
  }
  return o;
}

Outcome order_independence() {
  Outcome o;
  std::mt19937_64 rng(99);
  std::vector<std::vector<Point>> instances{{{-3, 3}, {3, 1}, {0, -3}}};
  while (instances.size() < 8) {
    auto hull = oracle::random_polygon(rng, 5);
    if (oracle::interior_points(hull).size() >= 3) instances.push_back(hull);
  }
  std::size_t runs = 0;
  for (const auto& hull : instances) {
    PolygonComplex start(oracle::polygon(hull));
    PolygonComplex reference = crepant_fixed_point_phase(start);
    for (int t = 0; t < 20; ++t) {
      std::mt19937_64 shuffle_rng(rng());
      PolygonComplex other = crepant_fixed_point_phase(
          start, nullptr, [&](std::vector<std::size_t>& ids) { std::shuffle(ids.begin(), ids.end(), shuffle_rng); });
      ++runs;
      o.check(other == reference, "ordering changed the result for " + start.polygon().to_string());
    }
  }
  if (o.pass) o.detail << instances.size() << " polygons x 20 orderings, " << runs << " identical complexes";
  return o;
}

Outcome census_conservation() {
  Outcome o;
  std::mt19937_64 rng(4242);
  auto maps = oracle::unimodular_3x3(rng, 40);
  std::size_t rays = 0, cones = 0;
  for (std::size_t i = 0; i < 40; ++i) {
    auto hull = oracle::random_polygon(rng, i < 20 ? 3 : 5);
    std::vector<LatticeVector> gens;
    for (const auto& p : hull) gens.push_back(oracle::to_vector(oracle::apply(maps[i], {p[0], p[1], 1})));
    Cone c = make_cone(gens);
    auto res = resolve(c);
    const auto points = oracle::polygon_points(hull).size();
    const auto area = static_cast<std::size_t>(oracle::twice_area(hull));
    o.check(res.fan.rays().size() == points, c.to_string() + ": " + std::to_string(res.fan.rays().size()) +
                                                 " rays, " + std::to_string(points) + " lattice points");
    o.check(res.fan.maximal_cones().size() == area, c.to_string() + ": " +
                                                        std::to_string(res.fan.maximal_cones().size()) +
                                                        " cones, normalized area " + std::to_string(area));
    o.check(res.fan.is_basic(), c.to_string() + ": a cone is not basic");
    rays += points;
    cones += area;
  }
  if (o.pass) o.detail << "40 polygons, " << rays << " rays and " << cones << " basic cones in total";
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "2D golden test", two_dimensional_golden},
      {2, "3D golden test", three_dimensional_golden},
      {3, "crepancy suite", crepancy_suite},
      {4, "Hilbert oracle suite", hilbert_suite},
      {5, "classifier consistency", classifier_consistency},
      {6, "Nakajima spot checks", nakajima_spot_checks},
      {7, "order independence", order_independence},
      {8, "area and census conservation", census_conservation},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

  bool all = true;
  for (const auto& c : criteria) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << " - "
              << o.detail.str() << " (" << static_cast<int>(secs * 1000) << " ms)" << std::endl;
    all = all && o.pass;
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
