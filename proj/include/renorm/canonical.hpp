#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "renorm/graph.hpp"

namespace renorm {

/// Isomorphism-invariant key of a graph: theory, leg count per vertex and the
/// edge multiplicity matrix under a canonical vertex order. Leg labels do not
/// take part (see README, "Graph identity").
struct CanonicalForm {
  std::string key;
  /// canonical position -> original vertex index
  std::vector<std::size_t> order;
};

/// Colour refinement to an equitable partition, then individualisation with
/// backtracking; the lexicographically least encoding wins.
CanonicalForm canonical_form(const FeynmanGraph& g);

inline std::string canonical_key(const FeynmanGraph& g) { return canonical_form(g).key; }

/// 64-bit FNV-1a; stable across platforms and runs.
std::uint64_t stable_hash(const std::string& text);

}  // namespace renorm
