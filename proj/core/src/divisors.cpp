#include "toric/divisors.hpp"

#include <algorithm>

namespace toric {

namespace {

// Rows are the rays of one cone; b their prescribed values.
struct Interpolation {
  std::vector<LatticeVector> rows;
  std::vector<Integer> rhs;
};

Interpolation interpolation_for(const SupportFunction& psi, const Cone& c) {
  Interpolation in;
  for (const auto& r : c.rays()) {
    in.rows.push_back(r);
    in.rhs.push_back(psi.value(r));
  }
  return in;
}

// Least k ≥ 1 such that rows · m = k · rhs has an integral solution, or
// nothing if no rational solution exists.
std::optional<Integer> integral_scale(const Interpolation& in, std::size_t rank) {
  if (in.rows.empty()) return Integer(1);
  IntMatrix a = IntMatrix::from_rows(in.rows, rank);
  SmithForm s = smith_normal_form(a);
  // p · a · q = d, so a m = b  ⟺  d (q⁻¹ m) = p b.
  LatticeVector b(std::vector<Integer>(in.rhs.begin(), in.rhs.end()));
  LatticeVector pb = s.p.apply(b);
  Integer k = 1;
  for (std::size_t i = 0; i < pb.rank(); ++i) {
    if (i >= s.rank) {
      if (pb[i] != 0) return std::nullopt;
      continue;
    }
    const Integer& di = s.d(i, i);
    Integer g = gcd(di, pb[i]);
    Integer need = di / g;
    k = lcm(k, need);
  }
  return k;
}

}  // namespace

const Integer& SupportFunction::value(const LatticeVector& ray) const {
  auto it = ray_values.find(ray);
  if (it == ray_values.end()) throw DomainError("support function has no value on ray " + ray.to_string());
  return it->second;
}

SupportFunction canonical_support(const Fan& f) {
  SupportFunction psi{f, {}, std::nullopt};
  for (const auto& r : f.rays()) psi.ray_values[r] = 1;
  return psi;
}

SupportFunction with_linear_representatives(SupportFunction psi) {
  std::vector<Covector> reps;
  for (const auto& c : psi.fan.maximal_cones()) {
    Interpolation in = interpolation_for(psi, c);
    std::vector<Rational> rhs(in.rhs.begin(), in.rhs.end());
    if (in.rows.empty()) {
      reps.emplace_back(std::vector<Rational>(psi.fan.rank()));
      continue;
    }
    auto sol = solve_rational(in.rows, rhs);
    if (!sol) throw DomainError("support function is not linear on " + c.to_string());
    reps.emplace_back(std::move(*sol));
  }
  psi.linear = std::move(reps);
  return psi;
}

std::optional<Integer> qcartier_index(const SupportFunction& psi) {
  Integer k = 1;
  for (const auto& c : psi.fan.maximal_cones()) {
    auto kc = integral_scale(interpolation_for(psi, c), psi.fan.rank());
    if (!kc) return std::nullopt;
    k = lcm(k, *kc);
  }
  return k;
}

bool is_cartier(const SupportFunction& psi) {
  auto k = qcartier_index(psi);
  return k && *k == 1;
}

bool is_strictly_upper_convex(const SupportFunction& psi) {
  if (!psi.linear) throw DomainError("is_strictly_upper_convex: missing linear representatives");
  const auto& cones = psi.fan.maximal_cones();
  if (psi.linear->size() != cones.size()) throw DomainError("is_strictly_upper_convex: representative count mismatch");
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const Covector& m = (*psi.linear)[i];
    for (const auto& r : cones[i].rays())
      if (m.pair(r) != psi.value(r)) throw DomainError("is_strictly_upper_convex: representative does not interpolate on " + cones[i].to_string());
    for (const auto& v : psi.fan.rays()) {
      if (cones[i].contains(v)) continue;
      if (m.pair(v) <= psi.value(v)) return false;
    }
  }
  return true;
}

bool DiscrepancyReport::is_crepant() const {
  return std::all_of(entries.begin(), entries.end(), [](const DiscrepancyEntry& e) { return e.discrepancy == 0; });
}

bool DiscrepancyReport::is_log_terminal() const {
  return std::all_of(entries.begin(), entries.end(), [](const DiscrepancyEntry& e) { return e.discrepancy > -1; });
}

DiscrepancyReport discrepancies(const Cone& base, const Fan& refinement) {
  if (base.rank() != refinement.rank()) throw DomainError("discrepancies: rank mismatch");
  std::vector<Rational> ones(base.rays().size(), Rational(1));
  auto m = base.rays().empty() ? std::optional<std::vector<Rational>>(std::vector<Rational>(base.rank()))
                               : solve_rational(base.rays(), ones);
  if (!m) throw DomainError("discrepancies: " + base.to_string() + " is not Q-Gorenstein");
  if (!refinement.has_support(base))
    throw DomainError("discrepancies: refinement does not have support " + base.to_string());

  DiscrepancyReport report{base, Covector(std::move(*m)), {}};
  for (const auto& v : refinement.rays()) {
    if (base.has_ray(v)) continue;
    report.entries.push_back({v, report.m_sigma.pair(v) - 1});
  }
  return report;
}

}  // namespace toric
