#include "renorm/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace renorm {

std::vector<Spinney> brute_force_wood(const FeynmanGraph& g, std::size_t edge_cap) {
  const auto subs = divergent_subgraphs(g, edge_cap);
  if (subs.size() > 20) throw std::length_error("brute_force_wood: too many divergent subgraphs");
  // Vertex sets computed directly from the edge list.
  std::vector<std::vector<bool>> touches(subs.size(), std::vector<bool>(g.vertex_count(), false));
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      if (subs[i].edges >> e & 1U) touches[i][g.edges()[e].u] = touches[i][g.edges()[e].v] = true;
  std::vector<Spinney> out;
  for (std::uint32_t mask = 1; mask < (1U << subs.size()); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < subs.size() && ok; ++i)
      for (std::size_t j = i + 1; j < subs.size() && ok; ++j)
        if ((mask >> i & 1U) && (mask >> j & 1U))
          for (std::size_t v = 0; v < g.vertex_count(); ++v)
            if (touches[i][v] && touches[j][v]) ok = false;
    if (!ok) continue;
    Spinney s;
    for (std::size_t i = 0; i < subs.size(); ++i)
      if (mask >> i & 1U) s.parts.push_back(subs[i]);
    std::sort(s.parts.begin(), s.parts.end());
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FeynmanGraph relabelled(const FeynmanGraph& g, Rng& rng) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  std::vector<std::string> names(n);
  for (std::size_t v = 0; v < n; ++v) names[perm[v]] = g.vertices()[v];
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    edges.push_back(rng.chance(1, 2) ? Edge{perm[e.v], perm[e.u]} : Edge{perm[e.u], perm[e.v]});
  for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[rng.below(i)]);
  std::vector<Leg> legs;
  for (const auto& l : g.legs()) legs.push_back({l.label, perm[l.vertex]});
  for (std::size_t i = legs.size(); i > 1; --i) std::swap(legs[i - 1], legs[rng.below(i)]);
  return FeynmanGraph(g.name(), g.theory(), std::move(names), std::move(edges), std::move(legs));
}

TripleTensor coproduct_left_iterated(const HopfAlgebra& h, const Forest& f) {
  TripleTensor out;
  for (const auto& t : h.coproduct(f).terms)
    for (const auto& u : h.coproduct(t.left).terms)
      out[{u.left, u.right, t.right}] += t.multiplicity * u.multiplicity;
  return out;
}

TripleTensor coproduct_right_iterated(const HopfAlgebra& h, const Forest& f) {
  TripleTensor out;
  for (const auto& t : h.coproduct(f).terms)
    for (const auto& u : h.coproduct(t.right).terms)
      out[{t.left, u.left, u.right}] += t.multiplicity * u.multiplicity;
  return out;
}

ContractionReport contraction_report(const FeynmanGraph& g, std::size_t edge_cap) {
  ContractionReport r;
  const PowerCounting pc = power_counting(g);
  for (const auto& s : wood(g, edge_cap).spinneys) {
    int loops = pc.loops;
    for (const auto& part : s.parts) loops -= power_counting(subgraph_graph(g, part)).loops;
    const PowerCounting q = power_counting(contract(g, s));
    if (q.loops != loops) r.loops_consistent = false;
    if (q.omega != pc.omega) r.omega_preserved = false;
  }
  return r;
}

std::optional<int> closed_form_omega(const TheoryConfig& t, int legs) {
  if ((t.dimension - 2) * t.valence != 2 * t.dimension) return std::nullopt;
  if ((t.dimension - 2) * legs % 2 != 0) return std::nullopt;
  return t.dimension - (t.dimension - 2) * legs / 2;
}

}  // namespace renorm
