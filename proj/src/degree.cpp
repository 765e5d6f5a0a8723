#include "renorm/degree.hpp"

#include <stdexcept>

#include "renorm/canonical.hpp"

namespace renorm {

std::string DegreeFunction::name() const {
  switch (kind_) {
    case DegreeKind::minimal: return "minimal";
    case DegreeKind::critical: return "critical";
    case DegreeKind::custom: return "custom";
  }
  return "unknown";
}

int DegreeFunction::operator()(const FeynmanGraph& g) const {
  switch (kind_) {
    case DegreeKind::minimal: return power_counting(g).omega;
    case DegreeKind::critical: return critical_degree(g);
    case DegreeKind::custom: {
      const std::string key = canonical_key(g);
      auto it = table_.find(key);
      if (it == table_.end())
        throw std::out_of_range("custom subtraction degree undefined for " + g.name() + " (" + key + ")");
      return it->second;
    }
  }
  throw std::logic_error("unhandled degree kind");
}

int critical_degree(const FeynmanGraph& g, std::size_t edge_cap) {
  const int omega = power_counting(g).omega;
  if (omega < 0)
    throw std::domain_error("critical degree requested for convergent graph " + g.name() +
                            " (omega = " + std::to_string(omega) + ")");
  int total = omega;
  for (const auto& sub : divergent_subgraphs(g, edge_cap)) total += subgraph_omega(g, sub.edges);
  return total;
}

DegreeValidation validate_degree_function(const DegreeFunction& a, const FeynmanGraph& g,
                                          std::size_t edge_cap) {
  DegreeValidation result;

  auto check = [&](const FeynmanGraph& gamma, bool whole) {
    const int a_gamma = a(gamma);
    const int omega_gamma = power_counting(gamma).omega;
    auto fail = [&](Spinney s, int bound) {
      if (whole) result.valid = false;
      else result.valid = result.valid_proper_only = false;
      if (!result.witness) result.witness = DegreeViolation{gamma, whole, std::move(s), a_gamma, bound};
    };
    if (a_gamma < omega_gamma) {
      fail({}, omega_gamma);
      return;
    }
    for (const auto& s : wood(gamma, edge_cap).spinneys) {
      int bound = omega_gamma;
      for (const auto& part : s.parts) {
        const FeynmanGraph sub = subgraph_graph(gamma, part);
        bound += a(sub) - power_counting(sub).omega;
      }
      if (a_gamma < bound) {
        fail(s, bound);
        return;
      }
    }
  };

  for (const auto& sub : divergent_subgraphs(g, edge_cap)) check(subgraph_graph(g, sub), false);
  if (power_counting(g).omega >= 0) check(g, true);
  return result;
}

}  // namespace renorm
