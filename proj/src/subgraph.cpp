#include "renorm/subgraph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace renorm {

namespace {

EdgeSet full_mask(std::size_t edges) {
  return edges >= 64 ? ~EdgeSet{0} : ((EdgeSet{1} << edges) - 1);
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Connectivity of the subset's endpoints using the subset's edges minus `skip`.
bool connected_without(const FeynmanGraph& g, EdgeSet s, EdgeSet skip) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::vector<bool> touched(n, false);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!(s >> e & 1)) continue;
    const auto& edge = g.edges()[e];
    touched[edge.u] = touched[edge.v] = true;
    if (skip >> e & 1) continue;
    parent[find_root(parent, edge.u)] = find_root(parent, edge.v);
  }
  std::size_t root = n;
  for (std::size_t v = 0; v < n; ++v) {
    if (!touched[v]) continue;
    const std::size_t r = find_root(parent, v);
    if (root == n) root = r;
    else if (r != root) return false;
  }
  return root != n;
}

std::string join_indices(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

}  // namespace

std::vector<std::size_t> SubgraphRef::edge_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < kMaxEdges; ++e)
    if (edges >> e & 1) out.push_back(e);
  return out;
}

std::vector<std::size_t> SubgraphRef::vertex_indices(const FeynmanGraph& parent) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < parent.edge_count(); ++e) {
    if (!(edges >> e & 1)) continue;
    out.push_back(parent.edges()[e].u);
    out.push_back(parent.edges()[e].v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int edge_count(EdgeSet s) { return std::popcount(s); }

FeynmanGraph subgraph_graph(const FeynmanGraph& parent, const SubgraphRef& sub) {
  const auto verts = sub.vertex_indices(parent);
  std::map<std::size_t, std::size_t> local;
  std::vector<std::string> names;
  for (std::size_t v : verts) {
    local[v] = names.size();
    names.push_back(parent.vertices()[v]);
  }
  std::vector<Edge> edges;
  std::vector<Leg> legs;
  for (std::size_t e = 0; e < parent.edge_count(); ++e) {
    const auto& edge = parent.edges()[e];
    if (sub.edges >> e & 1) {
      edges.push_back({local.at(edge.u), local.at(edge.v)});
      continue;
    }
    const std::string cut = "cut" + std::to_string(e);
    if (auto it = local.find(edge.u); it != local.end()) legs.push_back({cut, it->second});
    if (auto it = local.find(edge.v); it != local.end()) legs.push_back({cut, it->second});
  }
  for (const auto& leg : parent.legs())
    if (auto it = local.find(leg.vertex); it != local.end()) legs.push_back({leg.label, it->second});
  return FeynmanGraph(parent.name() + "[" + join_indices(sub.edge_indices()) + "]", parent.theory(),
                      std::move(names), std::move(edges), std::move(legs));
}

bool is_1pi_edge_set(const FeynmanGraph& g, EdgeSet s) {
  if (s == 0) return false;
  if (!connected_without(g, s, 0)) return false;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!(s >> e & 1) || g.edges()[e].is_self_loop()) continue;
    if (!connected_without(g, s, EdgeSet{1} << e)) return false;
  }
  return true;
}

int subgraph_omega(const FeynmanGraph& g, EdgeSet s) {
  const int lines = edge_count(s);
  const int vertices = static_cast<int>(SubgraphRef{s}.vertex_indices(g).size());
  const int loops = lines - vertices + 1;
  return g.theory().dimension * loops - 2 * lines;
}

std::vector<SubgraphRef> divergent_subgraphs(const FeynmanGraph& g, std::size_t edge_cap) {
  const std::size_t l = g.edge_count();
  if (l > edge_cap || l >= kMaxEdges)
    throw std::length_error("graph " + g.name() + " has " + std::to_string(l) +
                            " internal edges, above the enumeration cap of " + std::to_string(edge_cap));
  std::vector<SubgraphRef> out;
  const EdgeSet full = full_mask(l);
  std::vector<int> ends(g.vertex_count());
  for (EdgeSet s = 1; s < full; ++s) {
    // A vertex met by a single non-loop edge end makes that edge a bridge.
    std::fill(ends.begin(), ends.end(), 0);
    for (std::size_t e = 0; e < l; ++e) {
      if (!(s >> e & 1)) continue;
      const auto& edge = g.edges()[e];
      if (edge.is_self_loop()) {
        ends[edge.u] += 2;
      } else {
        ++ends[edge.u];
        ++ends[edge.v];
      }
    }
    if (std::any_of(ends.begin(), ends.end(), [](int d) { return d == 1; })) continue;
    if (!is_1pi_edge_set(g, s)) continue;
    if (subgraph_omega(g, s) < 0) continue;
    out.push_back({s});
  }
  return out;
}

bool vertex_disjoint(const FeynmanGraph& g, const SubgraphRef& a, const SubgraphRef& b) {
  const auto va = a.vertex_indices(g);
  const auto vb = b.vertex_indices(g);
  std::vector<std::size_t> common;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
  return common.empty();
}

Wood wood(const FeynmanGraph& g, std::size_t edge_cap) {
  const auto parts = divergent_subgraphs(g, edge_cap);
  const std::size_t n = parts.size();
  std::vector<std::vector<bool>> disjoint(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      disjoint[i][j] = disjoint[j][i] = vertex_disjoint(g, parts[i], parts[j]);

  Wood w;
  std::vector<std::size_t> chosen;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t i = from; i < n; ++i) {
      if (!std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return disjoint[c][i]; }))
        continue;
      chosen.push_back(i);
      Spinney s;
      for (std::size_t c : chosen) s.parts.push_back(parts[c]);
      w.spinneys.push_back(std::move(s));
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  std::stable_sort(w.spinneys.begin(), w.spinneys.end(), [](const Spinney& a, const Spinney& b) {
    if (a.parts.size() != b.parts.size()) return a.parts.size() < b.parts.size();
    return a.parts < b.parts;
  });
  return w;
}

void validate_spinney(const FeynmanGraph& g, const Spinney& s) {
  const EdgeSet full = full_mask(g.edge_count());
  for (std::size_t i = 0; i < s.parts.size(); ++i) {
    const EdgeSet m = s.parts[i].edges;
    const std::string where = "spinney part " + std::to_string(i) + " of " + g.name();
    if (m == 0 || (m & ~full) != 0) throw std::invalid_argument(where + ": edge subset out of range");
    if (m == full) throw std::invalid_argument(where + ": not a proper subgraph");
    if (!is_1pi_edge_set(g, m)) throw std::invalid_argument(where + ": not one-particle irreducible");
    if (subgraph_omega(g, m) < 0) throw std::invalid_argument(where + ": not UV divergent");
    for (std::size_t j = 0; j < i; ++j)
      if (!vertex_disjoint(g, s.parts[i], s.parts[j]))
        throw std::invalid_argument(where + ": shares a vertex with part " + std::to_string(j));
  }
}

FeynmanGraph contract(const FeynmanGraph& g, const Spinney& s) {
  if (s.parts.empty()) return g;
  validate_spinney(g, s);

  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> part_of(g.vertex_count(), kFree);
  EdgeSet removed = 0;
  for (std::size_t p = 0; p < s.parts.size(); ++p) {
    removed |= s.parts[p].edges;
    for (std::size_t v : s.parts[p].vertex_indices(g)) part_of[v] = p;
  }

  std::vector<std::string> names;
  std::vector<std::size_t> image(g.vertex_count());
  std::vector<std::size_t> pseudo_index(s.parts.size(), kFree);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const std::size_t p = part_of[v];
    if (p == kFree) {
      image[v] = names.size();
      names.push_back(g.vertices()[v]);
      continue;
    }
    if (pseudo_index[p] == kFree) {
      pseudo_index[p] = names.size();
      std::string label = "[";
      bool first = true;
      for (std::size_t w : s.parts[p].vertex_indices(g)) {
        label += (first ? "" : "+") + g.vertices()[w];
        first = false;
      }
      names.push_back(label + "]");
    }
    image[v] = pseudo_index[p];
  }

  std::vector<Edge> edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (!(removed >> e & 1)) edges.push_back({image[g.edges()[e].u], image[g.edges()[e].v]});
  std::vector<Leg> legs;
  for (const auto& leg : g.legs()) legs.push_back({leg.label, image[leg.vertex]});

  // Absorb two-valent pseudo-vertices into a single propagator.
  std::vector<bool> dropped(names.size(), false);
  for (std::size_t p = 0; p < s.parts.size(); ++p) {
    const std::size_t x = pseudo_index[p];
    if (std::any_of(legs.begin(), legs.end(), [x](const Leg& l) { return l.vertex == x; })) continue;
    std::vector<std::size_t> incident;
    bool loop = false;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edges[e].u != x && edges[e].v != x) continue;
      if (edges[e].is_self_loop()) loop = true;
      incident.push_back(e);
    }
    if (loop || incident.size() != 2) continue;
    const std::size_t a = edges[incident[0]].u == x ? edges[incident[0]].v : edges[incident[0]].u;
    const std::size_t b = edges[incident[1]].u == x ? edges[incident[1]].v : edges[incident[1]].u;
    edges[incident[0]] = {a, b};
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(incident[1]));
    dropped[x] = true;
  }

  std::vector<std::size_t> reindex(names.size(), kFree);
  std::vector<std::string> kept;
  for (std::size_t v = 0; v < names.size(); ++v) {
    if (dropped[v]) continue;
    reindex[v] = kept.size();
    kept.push_back(names[v]);
  }
  for (auto& e : edges) e = {reindex[e.u], reindex[e.v]};
  for (auto& leg : legs) leg.vertex = reindex[leg.vertex];

  std::string label = g.name() + "/{";
  for (std::size_t p = 0; p < s.parts.size(); ++p)
    label += (p ? ";" : "") + join_indices(s.parts[p].edge_indices());
  label += "}";
  return FeynmanGraph(std::move(label), g.theory(), std::move(kept), std::move(edges), std::move(legs));
}

}  // namespace renorm
