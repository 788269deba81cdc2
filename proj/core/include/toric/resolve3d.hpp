#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "toric/classify.hpp"
#include "toric/divisors.hpp"
#include "toric/fan.hpp"
#include "toric/polytope.hpp"

namespace toric {

/// The fan over the compact faces of conv((σ ∩ N) ∖ {0}); {c} itself when c
/// is already canonical.
Fan canonical_modification(const Cone& c);

/// A rank-3 Gorenstein cone as τ_P: `map` is unimodular with last row m_σ,
/// so x ↦ map·x sends Gen(σ) to P × {1}.
struct PolygonForm {
  LatticePolytope polygon;
  IntMatrix map;
  IntMatrix inverse;

  /// The lattice vector of the original lattice over a point of P's plane.
  LatticeVector to_ambient(const LatticeVector& point) const;
  Cone cone_over(const LatticePolytope& cell) const;
};

PolygonForm polygon_form(const Cone& c);

struct CellCensus {
  std::size_t interior_points = 0;
  std::size_t edge_points = 0;
  bool basic = false;
  bool unit_parallelogram = false;
};

struct ComplexCensus {
  std::size_t cells = 0;
  std::size_t cells_with_interior_points = 0;
  std::size_t interior_points = 0;  // summed over cells
  std::size_t edge_points = 0;      // distinct points inside cell edges
  std::size_t basic_cells = 0;
  std::size_t unit_parallelograms = 0;
  friend bool operator==(const ComplexCensus&, const ComplexCensus&) = default;
};

/// A lattice polygonal subdivision of P; its fan is the set of cones over
/// the cells placed at height one.
class PolygonComplex {
 public:
  PolygonComplex() = default;
  explicit PolygonComplex(LatticePolytope polygon);
  /// Validates that the cells tile P face to face.
  PolygonComplex(LatticePolytope polygon, std::vector<LatticePolytope> cells);

  const LatticePolytope& polygon() const { return polygon_; }
  const std::vector<LatticePolytope>& cells() const { return cells_; }  // sorted
  /// Sorted vertices of all cells.
  std::vector<LatticeVector> vertices() const;

  CellCensus cell_census(std::size_t i) const;
  ComplexCensus census() const;

  /// Cones over the cells in Z^3.
  Fan fan() const;

  friend bool operator==(const PolygonComplex& a, const PolygonComplex& b) {
    return a.polygon_ == b.polygon_ && a.cells_ == b.cells_;
  }

 private:
  LatticePolytope polygon_;
  std::vector<LatticePolytope> cells_;
};

/// Outcome of comparing the new central cell with conv(interior points of Q).
struct CentralCellCheck {
  LatticePolytope cell;
  LatticePolytope central;
  LatticePolytope interior_hull;
  bool matches = false;
};

/// One round of a phase: the centers blown up (cells, edges or
/// parallelograms), the lattice points that became vertices, and the state
/// afterwards.
struct PhaseRound {
  std::vector<LatticePolytope> centers;
  std::vector<LatticeVector> new_points;
  std::vector<CentralCellCheck> central_cells;
  PolygonComplex after;
};

/// Subdivides cell `cell` into the linearity domains of the order function
/// of the maximal ideal of its fixed point.
PolygonComplex blowup_fixed_point(const PolygonComplex& pc, std::size_t cell,
                                  CentralCellCheck* check = nullptr);

/// Permutes the indices of the eligible cells of a round before they are processed.
using CellOrder = std::function<void(std::vector<std::size_t>&)>;

PolygonComplex crepant_fixed_point_phase(const PolygonComplex& pc, std::vector<PhaseRound>* rounds = nullptr,
                                         const CellOrder& order = {});

/// Blows up the reduced 1-dimensional singular locus until no cell edge
/// carries interior lattice points.
PolygonComplex blowup_curve_phase(const PolygonComplex& pc, std::vector<PhaseRound>* rounds = nullptr);

struct ProjectivityCertificate {
  /// Integer heights on the lattice points of P.
  std::map<LatticeVector, Integer> heights;
  SupportFunction support;
  bool verified = false;
};

struct Completion {
  std::size_t index = 0;
  std::vector<bool> diagonals;  // per unit parallelogram, true = the other diagonal
  PolygonComplex triangulation;
  Fan fan;
  ProjectivityCertificate certificate;
};

/// Number of unit parallelograms; throws if some cell is neither basic nor a
/// unit parallelogram.
std::size_t completion_count(const PolygonComplex& pc);
Completion completion(const PolygonComplex& pc, std::size_t index);
std::vector<Completion> completions(const PolygonComplex& pc);

/// Heights on the lattice points of P making the triangulation regular, by an
/// exact LP (maximized margin, scaled to integers), checked through
/// is_strictly_upper_convex.
ProjectivityCertificate certify_projective(const PolygonComplex& triangulation);

enum class Phase { canonical, fixed_point_blowup, curve_blowup, completion };
const char* to_string(Phase p);

struct TraceStep {
  Phase phase = Phase::canonical;
  std::size_t piece = 0;
  bool in_cover = false;  // coordinates of the index-one cover lattice
  std::vector<Cone> centers;
  std::vector<LatticeVector> new_rays;
  std::optional<DiscrepancyReport> discrepancies;
  std::optional<ComplexCensus> census;
  std::vector<CentralCellCheck> central_cells;
};

struct ResolvedPiece {
  Cone cone;
  std::optional<GorensteinData> gorenstein;
  std::optional<IndexOneCover> cover;
  std::optional<PolygonForm> form;
  std::optional<PolygonComplex> complex;
  std::optional<ProjectivityCertificate> certificate;
  Fan fan;  // in the lattice of the piece (N₀ for covers)
};

struct ResolutionResult {
  Fan fan;
  std::vector<TraceStep> trace;
  std::vector<ResolvedPiece> pieces;
};

ResolutionResult resolve(const Cone& c);

}  // namespace toric
