#include "renorm/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace renorm {

namespace {

std::string summarize(const std::vector<GraphIssue>& issues) {
  std::ostringstream os;
  os << "invalid graph";
  for (const auto& issue : issues) {
    os << "\n  " << issue.graph;
    os << ": " << issue.message;
  }
  return os.str();
}

// Adjacency as (neighbour, edge id) pairs.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency(const FeynmanGraph& g) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edges()[e];
    adj[edge.u].emplace_back(edge.v, e);
    if (!edge.is_self_loop()) adj[edge.v].emplace_back(edge.u, e);
  }
  return adj;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

GraphValidationError::GraphValidationError(std::vector<GraphIssue> issues)
    : std::runtime_error(summarize(issues)), issues_(std::move(issues)) {}

void validate_theory(const TheoryConfig& theory) {
  if (theory.dimension < 1)
    throw std::invalid_argument("theory " + theory.name + ": dimension must be >= 1");
  if (theory.valence < 3)
    throw std::invalid_argument("theory " + theory.name + ": valence must be >= 3");
}

FeynmanGraph::FeynmanGraph(std::string name, TheoryConfig theory, std::vector<std::string> vertices,
                           std::vector<Edge> edges, std::vector<Leg> legs)
    : name_(std::move(name)),
      theory_(std::move(theory)),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      legs_(std::move(legs)) {
  for (const auto& e : edges_)
    if (e.u >= vertices_.size() || e.v >= vertices_.size())
      throw std::out_of_range("graph " + name_ + ": edge endpoint out of range");
  for (const auto& leg : legs_)
    if (leg.vertex >= vertices_.size())
      throw std::out_of_range("graph " + name_ + ": leg attached to unknown vertex");
}

int FeynmanGraph::degree(std::size_t v) const {
  int d = legs_at(v);
  for (const auto& e : edges_) {
    if (e.u == v) ++d;
    if (e.v == v) ++d;
  }
  return d;
}

int FeynmanGraph::legs_at(std::size_t v) const {
  return static_cast<int>(
      std::count_if(legs_.begin(), legs_.end(), [v](const Leg& l) { return l.vertex == v; }));
}

FeynmanGraph FeynmanGraph::renamed(std::string name) const {
  FeynmanGraph copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool is_connected(const FeynmanGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (const auto& e : g.edges()) parent[find_root(parent, e.u)] = find_root(parent, e.v);
  const std::size_t root = find_root(parent, 0);
  for (std::size_t v = 1; v < n; ++v)
    if (find_root(parent, v) != root) return false;
  return true;
}

std::vector<GraphIssue> graph_issues(const FeynmanGraph& g, bool check_valence) {
  std::vector<GraphIssue> issues;
  if (g.vertex_count() == 0) {
    issues.push_back({g.name(), "", "graph has no vertices"});
    return issues;
  }
  if (check_valence) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const int d = g.degree(v);
      if (d != g.theory().valence) {
        issues.push_back({g.name(), g.vertices()[v],
                          "vertex '" + g.vertices()[v] + "' has degree " + std::to_string(d) +
                              ", valence is " + std::to_string(g.theory().valence)});
      }
    }
  }
  if (!is_connected(g)) {
    // Name one vertex per extra component.
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    for (const auto& e : g.edges()) parent[find_root(parent, e.u)] = find_root(parent, e.v);
    const std::size_t root = find_root(parent, 0);
    std::vector<bool> reported(n, false);
    for (std::size_t v = 1; v < n; ++v) {
      const std::size_t r = find_root(parent, v);
      if (r != root && !reported[r]) {
        reported[r] = true;
        issues.push_back({g.name(), g.vertices()[v],
                          "graph is not connected: vertex '" + g.vertices()[v] + "' cannot reach '" +
                              g.vertices()[0] + "'"});
      }
    }
  }
  return issues;
}

void validate_graph(const FeynmanGraph& g, bool check_valence) {
  auto issues = graph_issues(g, check_valence);
  if (!issues.empty()) throw GraphValidationError(std::move(issues));
}

PowerCounting power_counting(const FeynmanGraph& g) {
  if (!is_connected(g))
    throw GraphValidationError({{g.name(), "", "power counting requires a connected graph"}});
  PowerCounting pc;
  pc.lines = static_cast<int>(g.edge_count());
  pc.vertices = static_cast<int>(g.vertex_count());
  pc.legs = static_cast<int>(g.leg_count());
  pc.loops = pc.lines - pc.vertices + 1;
  pc.omega = g.theory().dimension * pc.loops - 2 * pc.lines;
  return pc;
}

std::vector<std::size_t> bridges(const FeynmanGraph& g) {
  const std::size_t n = g.vertex_count();
  const auto adj = adjacency(g);
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::size_t> result;
  int timer = 0;

  struct Frame {
    std::size_t vertex;
    std::size_t via_edge;
    std::size_t next = 0;
  };
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  for (std::size_t start = 0; start < n; ++start) {
    if (disc[start] != -1) continue;
    std::vector<Frame> stack{{start, kNone}};
    disc[start] = low[start] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.vertex].size()) {
        const auto [w, e] = adj[f.vertex][f.next++];
        if (e == f.via_edge || g.edges()[e].is_self_loop()) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e});
        } else {
          low[f.vertex] = std::min(low[f.vertex], disc[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& parent = stack.back();
          low[parent.vertex] = std::min(low[parent.vertex], low[done.vertex]);
          if (low[done.vertex] > disc[parent.vertex]) result.push_back(done.via_edge);
        }
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool is_one_particle_irreducible(const FeynmanGraph& g) {
  return is_connected(g) && bridges(g).empty();
}

}  // namespace renorm
