#include "toresolve/json_io.hpp"

#include <algorithm>

namespace toresolve {

using namespace toric;

namespace {

void require_only(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; }))
      throw ParseError(where + ": unknown field \"" + it.key() + "\"");
  for (const char* k : allowed)
    if (!obj.contains(k)) throw ParseError(where + ": missing field \"" + k + "\"");
}

template <class T>
json array_of(const std::vector<T>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}

}  // namespace

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.dump());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    Integer x;
    if (s.empty() || x.set_str(s, 10) != 0) throw ParseError("not an integer: \"" + s + "\"");
    return x;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer() || j.is_string()) return Rational(integer_from_json(j));
  require_only(j, {"num", "den"}, "rational");
  Integer den = integer_from_json(j["den"]);
  if (den == 0) throw ParseError("rational with zero denominator");
  Rational q(integer_from_json(j["num"]), den);
  q.canonicalize();
  return q;
}

InputDocument parse_input(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  require_only(doc, {"lattice_rank", "cones"}, "document");
  if (!doc["lattice_rank"].is_number_unsigned() || doc["lattice_rank"].get<long long>() < 1)
    throw ParseError("document: lattice_rank must be a positive integer");
  InputDocument in;
  in.lattice_rank = doc["lattice_rank"].get<std::size_t>();
  if (!doc["cones"].is_array()) throw ParseError("document: cones must be an array");
  std::size_t k = 0;
  for (const auto& c : doc["cones"]) {
    const std::string where = "cones[" + std::to_string(k++) + "]";
    require_only(c, {"generators"}, where);
    if (!c["generators"].is_array() || c["generators"].empty())
      throw ParseError(where + ": generators must be a non-empty array");
    std::vector<LatticeVector> gens;
    for (const auto& g : c["generators"]) {
      if (!g.is_array() || g.size() != in.lattice_rank)
        throw ParseError(where + ": generator " + g.dump() + " does not have " + std::to_string(in.lattice_rank) +
                         " integer entries");
      std::vector<Integer> xs;
      for (const auto& x : g) {
        if (!x.is_number_integer() && !x.is_string()) throw ParseError(where + ": non-integer entry " + x.dump());
        xs.push_back(integer_from_json(x));
      }
      gens.emplace_back(std::move(xs));
    }
    in.cones.push_back(std::move(gens));
  }
  return in;
}

json to_json(const InputDocument& doc) {
  json cones = json::array();
  for (const auto& gens : doc.cones) cones.push_back({{"generators", array_of(gens)}});
  return {{"lattice_rank", doc.lattice_rank}, {"cones", cones}};
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

json to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json to_json(const Rational& x) { return {{"num", to_json(Integer(x.get_num()))}, {"den", to_json(Integer(x.get_den()))}}; }

json to_json(const LatticeVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const Covector& m) {
  json a = json::array();
  for (const auto& x : m.coords()) a.push_back(to_json(x));
  return a;
}

json to_json(const Cone& c) { return {{"rays", array_of(c.rays())}}; }

json to_json(const Fan& f) {
  json cones = json::array();
  for (const auto& c : f.maximal_cones()) cones.push_back(array_of(c.rays()));
  return {{"rays", array_of(f.rays())}, {"cones", cones}};
}

json to_json(const LatticePolytope& p) { return array_of(p.vertices()); }

json to_json(const GorensteinData& g) { return {{"m_sigma", to_json(g.m)}, {"index", to_json(g.index)}}; }

json to_json(const SingularityReport& r) {
  json j = {{"smooth", r.smooth},           {"q_factorial", r.q_factorial}, {"gorenstein", r.gorenstein},
            {"terminal", r.terminal},       {"canonical", r.canonical},     {"log_terminal", r.log_terminal},
            {"rational", r.rational},       {"q_gorenstein", nullptr},      {"lci", nullptr},
            {"embedding_dim", nullptr}};
  if (r.q_gorenstein) j["q_gorenstein"] = to_json(*r.q_gorenstein);
  if (r.lci) j["lci"] = *r.lci;
  if (r.embedding_dim) j["embedding_dim"] = *r.embedding_dim;
  return j;
}

json to_json(const IndexOneCover& c) {
  json basis = json::array();
  for (std::size_t i = 0; i < c.basis.rows(); ++i) basis.push_back(to_json(c.basis.row(i)));
  return {{"cone", to_json(c.cone)}, {"sublattice_basis", basis}, {"index", to_json(c.index)}, {"m_sigma", to_json(c.m)}};
}

json to_json(const DiscrepancyReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) entries.push_back({{"ray", to_json(e.ray)}, {"discrepancy", to_json(e.discrepancy)}});
  return {{"base_cone", to_json(r.base_cone)}, {"m_sigma", to_json(r.m_sigma)}, {"entries", entries},
          {"crepant", r.is_crepant()}};
}

json to_json(const ComplexCensus& c) {
  return {{"cells", c.cells},
          {"cells_with_interior_points", c.cells_with_interior_points},
          {"interior_points", c.interior_points},
          {"edge_points", c.edge_points},
          {"basic_cells", c.basic_cells},
          {"unit_parallelograms", c.unit_parallelograms}};
}

json to_json(const CentralCellCheck& c) {
  return {{"cell", to_json(c.cell)},
          {"central_cell", to_json(c.central)},
          {"interior_hull", to_json(c.interior_hull)},
          {"matches", c.matches}};
}

json to_json(const TraceStep& s) {
  json j = {{"phase", to_string(s.phase)},
            {"piece", s.piece},
            {"in_cover", s.in_cover},
            {"centers", array_of(s.centers)},
            {"new_rays", array_of(s.new_rays)},
            {"discrepancies", nullptr},
            {"census", nullptr},
            {"central_cells", array_of(s.central_cells)}};
  if (s.discrepancies) j["discrepancies"] = to_json(*s.discrepancies);
  if (s.census) j["census"] = to_json(*s.census);
  return j;
}

json to_json(const ProjectivityCertificate& c) {
  json heights = json::array();
  for (const auto& [p, h] : c.heights) heights.push_back({{"point", to_json(p)}, {"height", to_json(h)}});
  return {{"heights", heights}, {"verified", c.verified}};
}

json to_json(const Completion& c) {
  json cells = json::array();
  for (const auto& t : c.triangulation.cells()) cells.push_back(to_json(t));
  return {{"index", c.index},
          {"diagonals", c.diagonals},
          {"triangles", cells},
          {"fan", to_json(c.fan)},
          {"certificate", to_json(c.certificate)}};
}

json to_json(const ResolvedPiece& p) {
  json j = {{"cone", to_json(p.cone)},    {"gorenstein", nullptr}, {"cover", nullptr}, {"polygon", nullptr},
            {"map", nullptr},             {"fan", to_json(p.fan)}, {"certificate", nullptr}};
  if (p.gorenstein) j["gorenstein"] = to_json(*p.gorenstein);
  if (p.cover) j["cover"] = to_json(*p.cover);
  if (p.form) {
    j["polygon"] = to_json(p.form->polygon);
    json rows = json::array();
    for (std::size_t i = 0; i < 3; ++i) rows.push_back(to_json(p.form->map.row(i)));
    j["map"] = rows;
  }
  if (p.certificate) j["certificate"] = to_json(*p.certificate);
  return j;
}

json to_json(const ResolutionResult& r) {
  return {{"fan", to_json(r.fan)}, {"trace", array_of(r.trace)}, {"pieces", array_of(r.pieces)}};
}

json to_json(const MinimalResolution& r) {
  json ex = json::array();
  for (const auto& e : r.exceptional)
    ex.push_back({{"ray", to_json(e.ray)}, {"self_intersection", to_json(e.self_intersection)}});
  return {{"fan", to_json(r.fan)}, {"exceptional", ex}};
}

json to_json(const BinomialRelation& r) { return {{"lhs", r.lhs}, {"rhs", r.rhs}}; }

}  // namespace toresolve
