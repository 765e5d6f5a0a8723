#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "renorm/linear_form.hpp"
#include "renorm/scheme.hpp"
#include "renorm/subgraph.hpp"

namespace renorm {

enum class Verdict { confirmed, refuted };

std::string to_string(Verdict v);

/// One failed instance of CT or RT, reproducible from (seed, graph, spinney, sample).
struct IdentityWitness {
  std::string graph;
  std::string spinney;        // parts as parent edge lists, e.g. "{[0,1],[4,5]}"
  std::size_t spinney_index = 0;
  std::size_t sample = 0;
  std::uint64_t seed = 0;
  std::vector<TargetElement> x_parts;
  TargetElement x_whole;
  TargetElement lhs;
  TargetElement rhs;
};

struct IdentityStatus {
  Verdict verdict = Verdict::confirmed;
  std::size_t checks = 0;
  /// First failing sample of every refuted (graph, spinney) pair, in corpus order.
  std::vector<IdentityWitness> witnesses;
};

struct SchemeClassification {
  std::string scheme;
  std::size_t graphs = 0;     // divergent 1PI corpus graphs examined
  std::size_t pairs = 0;      // (graph, spinney) pairs
  int samples = 0;
  std::uint64_t seed = 0;
  IdentityStatus ct;
  IdentityStatus rt;

  Verdict st() const {
    return ct.verdict == Verdict::confirmed && rt.verdict == Verdict::confirmed ? Verdict::confirmed
                                                                                : Verdict::refuted;
  }
};

std::string spinney_text(const Spinney& s);

/// Tests the CT and RT identities on every (graph, spinney) pair of the
/// corpus with `samples` random inputs each. Sample 0 is the extremal input
/// x = p^a + p^(a+1) (Model B) or eps^-1 + 1 (Model A).
/// Throws std::invalid_argument for an empty corpus or samples < 1.
SchemeClassification classify_scheme(const SubtractionScheme& scheme, const std::vector<FeynmanGraph>& corpus,
                                     int samples, std::uint64_t seed, Execution ex = Execution::parallel,
                                     std::size_t edge_cap = kDefaultEdgeCap);

}  // namespace renorm
