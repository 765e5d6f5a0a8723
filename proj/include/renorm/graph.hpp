#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace renorm {

/// A scalar theory with a single monomial interaction of the given valence
/// in `dimension` spacetime dimensions.
struct TheoryConfig {
  std::string name;
  int dimension = 4;
  int valence = 4;

  friend bool operator==(const TheoryConfig&, const TheoryConfig&) = default;
};

/// Throws std::invalid_argument unless D >= 1 and valence >= 3.
void validate_theory(const TheoryConfig& theory);

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  bool is_self_loop() const { return u == v; }
};

struct Leg {
  std::string label;
  std::size_t vertex = 0;
};

struct PowerCounting {
  int loops = 0;      // L
  int lines = 0;      // l, internal edges
  int vertices = 0;   // V
  int legs = 0;       // N
  int omega = 0;      // D*L - 2*l

  friend bool operator==(const PowerCounting&, const PowerCounting&) = default;
};

/// One invariant violation. `vertex` names the offending vertex when there is one.
struct GraphIssue {
  std::string graph;
  std::string vertex;
  std::string message;
};

class GraphValidationError : public std::runtime_error {
 public:
  explicit GraphValidationError(std::vector<GraphIssue> issues);
  const std::vector<GraphIssue>& issues() const { return issues_; }

 private:
  std::vector<GraphIssue> issues_;
};

/// Labeled multigraph with external legs. Vertices are referred to by index;
/// names are kept for diagnostics and serialisation.
class FeynmanGraph {
 public:
  FeynmanGraph() = default;
  FeynmanGraph(std::string name, TheoryConfig theory, std::vector<std::string> vertices,
               std::vector<Edge> edges, std::vector<Leg> legs);

  const std::string& name() const { return name_; }
  const TheoryConfig& theory() const { return theory_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Leg>& legs() const { return legs_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t leg_count() const { return legs_.size(); }

  /// Number of internal edge endpoints plus legs at `v` (a self-loop counts twice).
  int degree(std::size_t v) const;
  int legs_at(std::size_t v) const;

  FeynmanGraph renamed(std::string name) const;

 private:
  std::string name_;
  TheoryConfig theory_;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<Leg> legs_;
};

struct GraphCorpus {
  std::vector<TheoryConfig> theories;
  std::vector<FeynmanGraph> graphs;
};

/// All violations of the graph invariants. The valence check applies only to
/// user-declared graphs; contraction produces vertices of other valences.
std::vector<GraphIssue> graph_issues(const FeynmanGraph& g, bool check_valence);

/// Throws GraphValidationError listing every violation.
void validate_graph(const FeynmanGraph& g, bool check_valence);

bool is_connected(const FeynmanGraph& g);

/// L = l - V + 1, omega = D*L - 2*l. Requires a connected graph.
PowerCounting power_counting(const FeynmanGraph& g);

/// Indices of internal edges whose removal disconnects the graph.
std::vector<std::size_t> bridges(const FeynmanGraph& g);

/// True iff connected and free of bridges. A single vertex without internal
/// edges counts as 1PI.
bool is_one_particle_irreducible(const FeynmanGraph& g);

}  // namespace renorm
