#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toric/resolve3d.hpp"

namespace toresolve {

/// One drawing of a polygon complex at height one.
struct SvgPanel {
  std::string title;
  toric::PolygonComplex complex;
  /// Vertex -> stage at which it became a vertex (0 = a vertex of P).
  std::map<toric::LatticeVector, int> stage;
  std::vector<std::string> stage_names;  // indexed by stage
  std::vector<std::pair<toric::LatticeVector, toric::LatticeVector>> diagonals;  // drawn dashed
};

/// Panels are stacked vertically in one SVG 1.1 document.
std::string render_svg(const std::vector<SvgPanel>& panels, unsigned scale = 40);

/// The pipeline of a rank-3 Gorenstein cone that is not basic: P, the
/// complex after each phase, and the chosen completion.
std::vector<SvgPanel> pipeline_panels(const toric::Cone& c, std::size_t completion_index = 0,
                                      const std::string& caption = {});

}  // namespace toresolve
