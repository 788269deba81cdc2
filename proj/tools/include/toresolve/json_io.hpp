#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/classify.hpp"
#include "toric/hilbert.hpp"
#include "toric/resolve2d.hpp"
#include "toric/resolve3d.hpp"

namespace toresolve {

using nlohmann::json;

/// Malformed input: invalid JSON, unknown or missing fields, wrong types.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputDocument {
  std::size_t lattice_rank = 0;
  std::vector<std::vector<toric::LatticeVector>> cones;  // generators as given
};

InputDocument parse_input(const std::string& text);
json to_json(const InputDocument& doc);
/// Two-space indented, keys sorted, trailing newline.
std::string dump_canonical(const json& j);

json to_json(const toric::Integer& x);
json to_json(const toric::Rational& x);
json to_json(const toric::LatticeVector& v);
json to_json(const toric::Covector& m);
json to_json(const toric::Cone& c);
json to_json(const toric::Fan& f);
json to_json(const toric::LatticePolytope& p);
json to_json(const toric::GorensteinData& g);
json to_json(const toric::SingularityReport& r);
json to_json(const toric::IndexOneCover& c);
json to_json(const toric::DiscrepancyReport& r);
json to_json(const toric::ComplexCensus& c);
json to_json(const toric::CentralCellCheck& c);
json to_json(const toric::TraceStep& s);
json to_json(const toric::ProjectivityCertificate& c);
json to_json(const toric::Completion& c);
json to_json(const toric::ResolvedPiece& p);
json to_json(const toric::ResolutionResult& r);
json to_json(const toric::MinimalResolution& r);
json to_json(const toric::BinomialRelation& r);

toric::Integer integer_from_json(const json& j);
toric::Rational rational_from_json(const json& j);

}  // namespace toresolve
