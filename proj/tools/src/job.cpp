#include "toresolve/job.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "toresolve/svg.hpp"

namespace toresolve {

using namespace toric;

namespace {

constexpr std::pair<Command, const char*> kCommands[] = {{Command::classify, "classify"},
                                                         {Command::hilbert, "hilbert"},
                                                         {Command::resolve2d, "resolve2d"},
                                                         {Command::resolve3d, "resolve3d"},
                                                         {Command::render, "render"}};

std::string describe(const std::vector<LatticeVector>& gens) {
  std::string s = "pos{";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + gens[i].to_string();
  return s + "}";
}

// Rethrows core errors with the offending cone in the message.
template <class F>
auto with_cone(const std::string& name, F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw DomainError("cone " + name + ": " + e.what());
  }
}

json array_of_vectors(const std::vector<LatticeVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

json classify_entry(const Cone& c) {
  SingularityReport r = classify(c);
  json j = to_json(r);
  // properties every affine toric variety has
  j["normal"] = true;
  j["cohen_macaulay"] = true;
  json entry = {{"cone", to_json(c)},
                {"report", j},
                {"simplicial", is_simplicial(c)},
                {"multiplicity", to_json(multiplicity(c))},
                {"lri_general_section", nullptr}};
  if (c.rank() == 3 && c.is_full_dimensional() && r.gorenstein && !r.smooth && r.embedding_dim && *r.embedding_dim >= 5)
    entry["lri_general_section"] = lri_general_section(c);
  return entry;
}

json hilbert_entry(const Cone& c, const std::optional<unsigned>& degree_bound) {
  json entry = {{"cone", to_json(c)},
                {"hilbert_basis", array_of_vectors(hilbert_basis(c).members)},
                {"dual_hilbert_basis", nullptr},
                {"embedding_dimension", nullptr},
                {"relations", nullptr}};
  if (c.is_full_dimensional()) {
    entry["dual_hilbert_basis"] = array_of_vectors(hilbert_basis(dual_cone(c)).members);
    entry["embedding_dimension"] = embedding_dimension(c);
    if (degree_bound) {
      json rel = json::array();
      for (const auto& r : toric_relations(c, *degree_bound)) rel.push_back(to_json(r));
      entry["relations"] = rel;
    }
  } else if (degree_bound) {
    throw DomainError("relations need a full-dimensional cone");
  }
  return entry;
}

json resolve2d_entry(const Cone& c) {
  if (c.rank() != 2) throw DomainError("resolve2d needs a rank-2 cone");
  auto [p, q] = cyclic_quotient_type(c);
  json entry = {{"cone", to_json(c)},
                {"type", {{"p", to_json(p)}, {"q", to_json(q)}}},
                {"continued_fraction", nullptr},
                {"resolution", to_json(minimal_resolution(c))}};
  if (p > 1) {
    json terms = json::array();
    for (const auto& a : cf_expansion(p, q).terms) terms.push_back(to_json(a));
    entry["continued_fraction"] = terms;
  }
  return entry;
}

Cone working_cone(const ResolvedPiece& piece) { return piece.cover ? piece.cover->cone : piece.cone; }

PolygonComplex pre_completion(const Cone& work) {
  PolygonForm form = polygon_form(work);
  return blowup_curve_phase(crepant_fixed_point_phase(PolygonComplex(form.polygon)));
}

std::size_t completion_index(const std::optional<std::string>& sel) {
  if (!sel || *sel == "all") return 0;
  return std::stoul(*sel);
}

json resolve3d_entry(const Cone& c, const JobSpec& spec) {
  if (c.rank() != 3) throw DomainError("resolve3d needs a rank-3 cone");
  ResolutionResult res = resolve(c);
  json entry = to_json(res);
  entry["cone"] = to_json(c);
  entry["completions"] = nullptr;
  if (spec.completion) {
    json all = json::array();
    for (std::size_t i = 0; i < res.pieces.size(); ++i) {
      if (!res.pieces[i].complex) continue;
      PolygonComplex pc = pre_completion(working_cone(res.pieces[i]));
      json list = json::array();
      if (*spec.completion == "all") {
        for (const auto& comp : completions(pc)) list.push_back(to_json(comp));
      } else {
        list.push_back(to_json(completion(pc, completion_index(spec.completion))));
      }
      all.push_back({{"piece", i}, {"completions", list}});
    }
    entry["completions"] = all;
  }
  return entry;
}

std::vector<SvgPanel> panels_for(const Cone& c, const JobSpec& spec, const std::string& name) {
  if (c.rank() != 3) throw DomainError("rendering needs a rank-3 cone");
  std::vector<SvgPanel> panels;
  std::size_t index = completion_index(spec.completion);
  ResolutionResult res = resolve(c);
  for (std::size_t i = 0; i < res.pieces.size(); ++i) {
    if (!res.pieces[i].complex) continue;
    auto more = pipeline_panels(working_cone(res.pieces[i]), index,
                                name + " piece " + std::to_string(i) + (res.pieces[i].cover ? " (cover)" : ""));
    panels.insert(panels.end(), more.begin(), more.end());
  }
  return panels;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw ParseError("cannot write " + path);
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  for (const auto& [c, n] : kCommands)
    if (name == n) return c;
  return std::nullopt;
}

const char* to_string(Command c) {
  for (const auto& [k, n] : kCommands)
    if (k == c) return n;
  return "?";
}

json report(const JobSpec& spec, const InputDocument& doc) {
  if (spec.completion && *spec.completion != "all") {
    const auto& s = *spec.completion;
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("--completion expects an index or \"all\", got \"" + s + "\"");
  }
  json results = json::array();
  for (const auto& gens : doc.cones) {
    std::string name = describe(gens);
    Cone c = with_cone(name, [&] { return make_cone_in_rank(gens, doc.lattice_rank); });
    name = c.to_string();
    json entry = with_cone(name, [&]() -> json {
      switch (spec.command) {
        case Command::classify: return classify_entry(c);
        case Command::hilbert: return hilbert_entry(c, spec.degree_bound);
        case Command::resolve2d: return resolve2d_entry(c);
        case Command::resolve3d: return resolve3d_entry(c, spec);
        case Command::render: {
          auto panels = panels_for(c, spec, name);
          json cells = json::array();
          for (const auto& p : panels) cells.push_back({{"title", p.title}, {"census", to_json(p.complex.census())}});
          return {{"cone", to_json(c)}, {"panels", cells}};
        }
      }
      return nullptr;
    });
    results.push_back(std::move(entry));
  }
  return {{"command", to_string(spec.command)}, {"results", results}};
}

int run(const JobSpec& spec, std::ostream& err) {
  try {
    InputDocument doc = parse_input(read_file(spec.input));
    json out = report(spec, doc);

    if (spec.svg || spec.command == Command::render) {
      std::vector<SvgPanel> panels;
      for (const auto& gens : doc.cones) {
        Cone c = make_cone_in_rank(gens, doc.lattice_rank);
        auto more = with_cone(c.to_string(), [&] { return panels_for(c, spec, c.to_string()); });
        panels.insert(panels.end(), more.begin(), more.end());
      }
      std::string svg = render_svg(panels, spec.scale);
      if (spec.command == Command::render && !spec.svg) {
        write_file(spec.output, svg);
        return exit_code::ok;
      }
      write_file(*spec.svg, svg);
    }
    write_file(spec.output, dump_canonical(out));
    return exit_code::ok;
  } catch (const ParseError& e) {
    err << "toresolve: " << e.what() << '\n';
    return exit_code::parse_error;
  } catch (const DomainError& e) {
    err << "toresolve: " << e.what() << '\n';
    return exit_code::domain_error;
  } catch (const std::exception& e) {
    err << "toresolve: internal error: " << e.what() << '\n';
    return exit_code::internal_error;
  }
}

}  // namespace toresolve
