#include "toresolve/svg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace toresolve {

using namespace toric;

namespace {

const char* const kPalette[] = {"#222222", "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2"};

const char* colour(int stage) { return kPalette[stage % (sizeof(kPalette) / sizeof(kPalette[0]))]; }

struct Frame {
  long min_x, max_x, min_y, max_y;
  long scale, left, top;

  long x(const LatticeVector& p) const { return left + (p[0].get_si() - min_x) * scale; }
  long y(const LatticeVector& p) const { return top + (max_y - p[1].get_si()) * scale; }
  long width() const { return (max_x - min_x) * scale; }
  long height() const { return (max_y - min_y) * scale; }
};

Frame frame_for(const LatticePolytope& p, long scale, long top) {
  Frame f{0, 0, 0, 0, scale, 30, top};
  bool first = true;
  for (const auto& v : p.vertices()) {
    long x = v[0].get_si(), y = v[1].get_si();
    if (first) {
      f.min_x = f.max_x = x;
      f.min_y = f.max_y = y;
      first = false;
    }
    f.min_x = std::min(f.min_x, x);
    f.max_x = std::max(f.max_x, x);
    f.min_y = std::min(f.min_y, y);
    f.max_y = std::max(f.max_y, y);
  }
  // one spare lattice unit on every side
  --f.min_x, ++f.max_x, --f.min_y, ++f.max_y;
  return f;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string points_attr(const Frame& f, const LatticePolytope& cell) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : cell.vertices()) {
    if (!first) os << ' ';
    os << f.x(v) << ',' << f.y(v);
    first = false;
  }
  return os.str();
}

}  // namespace

std::string render_svg(const std::vector<SvgPanel>& panels, unsigned scale) {
  const long title_h = 24, legend_line = 16, gap = 20;
  std::ostringstream body;
  long top = 10, width = 200;

  for (const auto& panel : panels) {
    const auto& P = panel.complex.polygon();
    body << "<text x=\"30\" y=\"" << top + 16 << "\" font-size=\"14\">" << escape(panel.title) << "</text>\n";
    top += title_h;
    width = std::max(width, 40 + 8 * static_cast<long>(panel.title.size()));
    Frame f = frame_for(P, scale, top);

    body << "<g>\n";
    for (long x = f.min_x; x <= f.max_x; ++x)
      for (long y = f.min_y; y <= f.max_y; ++y) {
        LatticeVector p{x, y};
        body << "<circle cx=\"" << f.x(p) << "\" cy=\"" << f.y(p) << "\" r=\"2\" fill=\"#bbbbbb\"/>\n";
      }
    body << "</g>\n";

    for (const auto& cell : panel.complex.cells())
      if (cell.is_unit_parallelogram())
        body << "<polygon points=\"" << points_attr(f, cell) << "\" fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"none\"/>\n";

    std::set<std::pair<LatticeVector, LatticeVector>> edges;
    for (const auto& cell : panel.complex.cells())
      for (auto [a, b] : cell.edges()) {
        if (b < a) std::swap(a, b);
        edges.emplace(a, b);
      }
    for (const auto& [a, b] : edges)
      body << "<line x1=\"" << f.x(a) << "\" y1=\"" << f.y(a) << "\" x2=\"" << f.x(b) << "\" y2=\"" << f.y(b)
           << "\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
    for (const auto& [a, b] : panel.diagonals)
      body << "<line x1=\"" << f.x(a) << "\" y1=\"" << f.y(a) << "\" x2=\"" << f.x(b) << "\" y2=\"" << f.y(b)
           << "\" stroke=\"#000000\" stroke-width=\"1\" stroke-dasharray=\"4,3\"/>\n";

    for (const auto& v : panel.complex.vertices()) {
      auto it = panel.stage.find(v);
      int stage = it == panel.stage.end() ? 0 : it->second;
      body << "<circle cx=\"" << f.x(v) << "\" cy=\"" << f.y(v) << "\" r=\"4\" fill=\"" << colour(stage) << "\"/>\n";
      if (stage > 0)
        body << "<text x=\"" << f.x(v) + 5 << "\" y=\"" << f.y(v) - 5 << "\" font-size=\"10\" fill=\"" << colour(stage)
             << "\">" << stage << "</text>\n";
    }
    top += f.height();
    width = std::max(width, f.width() + 60);

    top += 10;
    for (std::size_t s = 0; s < panel.stage_names.size(); ++s) {
      top += legend_line;
      body << "<circle cx=\"36\" cy=\"" << top - 4 << "\" r=\"4\" fill=\"" << colour(static_cast<int>(s)) << "\"/>\n"
           << "<text x=\"46\" y=\"" << top << "\" font-size=\"11\">" << s << ": " << escape(panel.stage_names[s])
           << "</text>\n";
    }
    top += gap;
  }

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << top
     << "\" viewBox=\"0 0 " << width << ' ' << top << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << top << "\" fill=\"#ffffff\"/>\n"
     << body.str() << "</svg>\n";
  return os.str();
}

std::vector<SvgPanel> pipeline_panels(const Cone& c, std::size_t completion_index, const std::string& caption) {
  PolygonForm form = polygon_form(c);
  std::vector<PhaseRound> r3, r4;
  PolygonComplex start(form.polygon);
  PolygonComplex after3 = crepant_fixed_point_phase(start, &r3);
  PolygonComplex after4 = blowup_curve_phase(after3, &r4);
  Completion comp = completion(after4, completion_index);

  std::map<LatticeVector, int> stage;
  std::vector<std::string> names{"vertex of P"};
  for (const auto& v : form.polygon.vertices()) stage[v] = 0;
  auto add_rounds = [&](const std::vector<PhaseRound>& rounds, const std::string& label) {
    for (std::size_t k = 0; k < rounds.size(); ++k) {
      int s = static_cast<int>(names.size());
      names.push_back(label + ", round " + std::to_string(k + 1));
      for (const auto& p : rounds[k].new_points) stage.emplace(p, s);
    }
  };
  add_rounds(r3, "fixed-point blow-up");
  add_rounds(r4, "curve blow-up");

  std::vector<std::pair<LatticeVector, LatticeVector>> diagonals;
  for (const auto& cell : after4.cells()) {
    if (!cell.is_unit_parallelogram()) continue;
    const auto& v = cell.vertices();
    for (int k = 0; k < 2; ++k) {
      const LatticeVector &a = v[k], &b = v[k + 2];
      bool used = std::any_of(comp.triangulation.cells().begin(), comp.triangulation.cells().end(), [&](const auto& t) {
        const auto& tv = t.vertices();
        return std::find(tv.begin(), tv.end(), a) != tv.end() && std::find(tv.begin(), tv.end(), b) != tv.end();
      });
      if (used) diagonals.emplace_back(a, b);
    }
  }

  const std::string prefix = caption.empty() ? "" : caption + ": ";
  std::vector<SvgPanel> panels;
  panels.push_back({prefix + "P", start, stage, names, {}});
  panels.push_back({prefix + "after fixed-point blow-ups", after3, stage, names, {}});
  panels.push_back({prefix + "after curve blow-ups", after4, stage, names, diagonals});
  panels.push_back({prefix + "completion " + std::to_string(completion_index), comp.triangulation, stage, names, {}});
  return panels;
}

}  // namespace toresolve
