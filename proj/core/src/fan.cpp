#include "toric/fan.hpp"

#include <algorithm>
#include <map>

namespace toric {

namespace {

bool is_subset(const std::vector<LatticeVector>& a, const std::vector<LatticeVector>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Fan make_fan(std::vector<Cone> cones, std::size_t rank) {
  for (const auto& c : cones)
    if (c.rank() != rank) throw DomainError("make_fan: cone " + c.to_string() + " has the wrong rank");
  std::sort(cones.begin(), cones.end(), [](const Cone& a, const Cone& b) { return a.rays() < b.rays(); });
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());

  // f ≥ 0 on a and f < 0 on b ∖ {0} forces a ∩ b = {0}.
  auto separated = [](const Cone& a, const Cone& b) {
    if (b.dim() == 0) return false;
    return std::any_of(a.facets().begin(), a.facets().end(), [&](const LatticeVector& f) {
      return std::all_of(b.rays().begin(), b.rays().end(), [&](const LatticeVector& r) { return dot(f, r) < 0; });
    });
  };
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      if (separated(cones[i], cones[j]) || separated(cones[j], cones[i])) continue;
      Cone meet = intersect(cones[i], cones[j]);
      if (!is_face_of(meet, cones[i]) || !is_face_of(meet, cones[j]))
        throw DomainError("make_fan: cones " + cones[i].to_string() + " and " + cones[j].to_string() +
                          " intersect in " + meet.to_string() + ", which is not a common face");
    }

  Fan f(rank);
  for (std::size_t i = 0; i < cones.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < cones.size() && !dominated; ++j)
      if (i != j && cones[j].dim() > cones[i].dim() && is_subset(cones[i].rays(), cones[j].rays()) &&
          is_face_of(cones[i], cones[j]))
        dominated = true;
    if (!dominated) f.cones_.push_back(cones[i]);
  }
  for (const auto& c : f.cones_) f.rays_.insert(f.rays_.end(), c.rays().begin(), c.rays().end());
  std::sort(f.rays_.begin(), f.rays_.end());
  f.rays_.erase(std::unique(f.rays_.begin(), f.rays_.end()), f.rays_.end());
  return f;
}

Fan make_fan(std::vector<Cone> cones) {
  if (cones.empty()) throw DomainError("make_fan: cannot infer rank of an empty fan");
  std::size_t rank = cones.front().rank();
  return make_fan(std::move(cones), rank);
}

bool Fan::contains(const LatticeVector& x) const {
  return std::any_of(cones_.begin(), cones_.end(), [&](const Cone& c) { return c.contains(x); });
}

bool Fan::is_basic() const {
  return std::all_of(cones_.begin(), cones_.end(), [](const Cone& c) { return toric::is_basic(c); });
}

bool Fan::has_support(const Cone& sigma) const {
  if (cones_.empty()) return sigma.dim() == 0;
  for (const auto& c : cones_) {
    if (c.dim() != sigma.dim()) return false;
    for (const auto& r : c.rays())
      if (!sigma.contains(r)) return false;
  }
  std::map<std::vector<LatticeVector>, int> facet_count;
  for (const auto& c : cones_)
    for (const auto& n : c.facets()) {
      Cone f = c.face(n);
      bool on_boundary = std::any_of(sigma.facets().begin(), sigma.facets().end(), [&](const LatticeVector& w) {
        return std::all_of(f.rays().begin(), f.rays().end(), [&](const LatticeVector& r) { return dot(w, r) == 0; });
      });
      if (!on_boundary) ++facet_count[f.rays()];
    }
  return std::all_of(facet_count.begin(), facet_count.end(), [](const auto& kv) { return kv.second == 2; });
}

Fan star_subdivision(const Fan& f, const LatticeVector& v) {
  if (v.rank() != f.rank()) throw DomainError("star_subdivision: rank mismatch");
  if (!v.is_primitive()) throw DomainError("star_subdivision: " + v.to_string() + " is not primitive");
  if (!f.contains(v)) throw DomainError("star_subdivision: " + v.to_string() + " lies outside the support");
  if (std::binary_search(f.rays().begin(), f.rays().end(), v)) return f;

  std::vector<Cone> out;
  for (const auto& c : f.maximal_cones()) {
    if (!c.contains(v)) {
      out.push_back(c);
      continue;
    }
    for (const auto& n : c.facets()) {
      if (dot(n, v) == 0) continue;
      std::vector<LatticeVector> gens = c.face(n).rays();
      gens.push_back(v);
      out.push_back(make_cone_in_rank(gens, f.rank()));
    }
  }
  return make_fan(std::move(out), f.rank());
}

}  // namespace toric
