#pragma once

#include <map>
#include <optional>
#include <string>

#include "renorm/graph.hpp"
#include "renorm/subgraph.hpp"

namespace renorm {

enum class DegreeKind { minimal, critical, custom };

/// Subtraction degree a(G): the Taylor-jet order used when subtracting G.
class DegreeFunction {
 public:
  static DegreeFunction minimal() { return DegreeFunction(DegreeKind::minimal, {}); }
  static DegreeFunction critical() { return DegreeFunction(DegreeKind::critical, {}); }
  /// `table` maps canonical keys to a(G).
  static DegreeFunction custom(std::map<std::string, int> table) {
    return DegreeFunction(DegreeKind::custom, std::move(table));
  }

  DegreeKind kind() const { return kind_; }
  const std::map<std::string, int>& table() const { return table_; }
  std::string name() const;

  /// Throws std::out_of_range when a custom table has no entry for `g`.
  int operator()(const FeynmanGraph& g) const;

 private:
  DegreeFunction(DegreeKind kind, std::map<std::string, int> table)
      : kind_(kind), table_(std::move(table)) {}

  DegreeKind kind_;
  std::map<std::string, int> table_;
};

/// omega(G) plus the omegas of all proper divergent 1PI subgraphs.
/// Throws std::domain_error when omega(G) < 0.
int critical_degree(const FeynmanGraph& g, std::size_t edge_cap = kDefaultEdgeCap);

struct DegreeViolation {
  FeynmanGraph subgraph;    // the gamma whose inequality fails
  bool is_whole_graph = false;
  Spinney spinney;          // indexes `subgraph`; empty for the plain a >= omega check
  int degree = 0;           // a(gamma)
  int bound = 0;            // omega(gamma) + sum(a(gamma_i) - omega(gamma_i))
};

struct DegreeValidation {
  /// Inequality holds for every divergent 1PI gamma including G itself.
  bool valid = true;
  /// Inequality holds for every proper gamma (G excluded).
  bool valid_proper_only = true;
  std::optional<DegreeViolation> witness;
};

/// Checks a(gamma) >= omega(gamma) + sum_{gamma_i in S} (a(gamma_i) - omega(gamma_i))
/// for every divergent 1PI subgraph gamma of G (G included) and every S in W(gamma),
/// plus S = {} (a >= omega). Returns the first violation found.
DegreeValidation validate_degree_function(const DegreeFunction& a, const FeynmanGraph& g,
                                          std::size_t edge_cap = kDefaultEdgeCap);

}  // namespace renorm
