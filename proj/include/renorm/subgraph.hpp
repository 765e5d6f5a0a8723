#pragma once

#include <cstdint>
#include <vector>

#include "renorm/graph.hpp"

namespace renorm {

/// Bit i set <=> internal edge i of the parent belongs to the subset.
using EdgeSet = std::uint64_t;

inline constexpr std::size_t kMaxEdges = 64;
inline constexpr std::size_t kDefaultEdgeCap = 12;

/// A subgraph given by a subset of the parent's internal edges. Its vertices
/// are the endpoints; its legs are the parent half-edges at those vertices
/// that are not in the subset.
struct SubgraphRef {
  EdgeSet edges = 0;

  std::vector<std::size_t> edge_indices() const;
  /// Parent vertex indices touched by the subset, ascending.
  std::vector<std::size_t> vertex_indices(const FeynmanGraph& parent) const;

  friend auto operator<=>(const SubgraphRef&, const SubgraphRef&) = default;
};

/// Pairwise vertex-disjoint proper divergent 1PI subgraphs, ordered by edge mask.
struct Spinney {
  std::vector<SubgraphRef> parts;

  friend auto operator<=>(const Spinney&, const Spinney&) = default;
};

struct Wood {
  std::vector<Spinney> spinneys;
};

/// Materialises the subgraph as a standalone graph (vertex names kept; the
/// external half-edges become legs named after the cut edge or the parent leg).
FeynmanGraph subgraph_graph(const FeynmanGraph& parent, const SubgraphRef& sub);

int edge_count(EdgeSet s);

/// Connected and bridgeless over the subset's endpoints.
bool is_1pi_edge_set(const FeynmanGraph& g, EdgeSet s);

/// omega of the subset under the parent's theory (requires a connected subset).
int subgraph_omega(const FeynmanGraph& g, EdgeSet s);

/// Every proper, connected, bridgeless edge subset with omega >= 0.
/// Throws std::length_error if the graph exceeds `edge_cap` internal edges.
std::vector<SubgraphRef> divergent_subgraphs(const FeynmanGraph& g,
                                             std::size_t edge_cap = kDefaultEdgeCap);

bool vertex_disjoint(const FeynmanGraph& g, const SubgraphRef& a, const SubgraphRef& b);

/// All nonempty sets of pairwise vertex-disjoint divergent subgraphs.
Wood wood(const FeynmanGraph& g, std::size_t edge_cap = kDefaultEdgeCap);

/// Throws std::invalid_argument if `s` is not a spinney of `g`.
void validate_spinney(const FeynmanGraph& g, const Spinney& s);

/// Shrinks every part to a pseudo-vertex. A two-valent pseudo-vertex without
/// legs is absorbed into a single propagator, so a contracted self-energy
/// leaves a plain line behind. The empty spinney is the identity.
FeynmanGraph contract(const FeynmanGraph& g, const Spinney& s);

}  // namespace renorm
