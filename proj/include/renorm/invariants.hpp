#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "renorm/hopf.hpp"
#include "renorm/random.hpp"

namespace renorm {

/// Sum over spinney subsets: every subset of divergent_subgraphs(g) whose
/// members are pairwise vertex-disjoint, checked by a separate filter.
std::vector<Spinney> brute_force_wood(const FeynmanGraph& g, std::size_t edge_cap = kDefaultEdgeCap);

/// Random vertex permutation and edge/leg reordering of g.
FeynmanGraph relabelled(const FeynmanGraph& g, Rng& rng);

using TripleTensor = std::map<std::tuple<Forest, Forest, Forest>, std::uint64_t>;

/// (Delta x id) Delta and (id x Delta) Delta of a forest.
TripleTensor coproduct_left_iterated(const HopfAlgebra& h, const Forest& f);
TripleTensor coproduct_right_iterated(const HopfAlgebra& h, const Forest& f);

/// For every spinney S of g: L(g/S) = L(g) - sum L(gamma) and omega(g/S) = omega(g).
struct ContractionReport {
  bool loops_consistent = true;
  bool omega_preserved = true;
};
ContractionReport contraction_report(const FeynmanGraph& g, std::size_t edge_cap = kDefaultEdgeCap);

/// D - (D-2)N/2 when every vertex of the theory contributes zero to omega
/// (that is, (D-2)v = 2D); the closed form of the degree of divergence.
std::optional<int> closed_form_omega(const TheoryConfig& t, int legs);

}  // namespace renorm
