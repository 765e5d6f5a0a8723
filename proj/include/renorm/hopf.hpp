#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "renorm/graph.hpp"
#include "renorm/subgraph.hpp"

namespace renorm {

/// Monomial of the polynomial algebra: sorted generator ids, repeats allowed.
/// The empty forest is the unit.
using Forest = std::vector<std::size_t>;

Forest forest_product(const Forest& a, const Forest& b);

struct Generator {
  FeynmanGraph graph;
  std::string key;   // canonical form
  int loops = 0;
  bool from_input = false;
};

struct TensorTerm {
  Forest left;
  Forest right;
  std::uint64_t multiplicity = 1;

  friend bool operator==(const TensorTerm&, const TensorTerm&) = default;
};

/// Terms sorted by (left, right), one entry per distinct pair.
struct TensorSum {
  std::vector<TensorTerm> terms;

  std::uint64_t total_multiplicity() const;
  friend bool operator==(const TensorSum&, const TensorSum&) = default;
};

struct SkippedGraph {
  std::string name;
  std::string reason;
};

/// Graded Hopf algebra generated by the divergent 1PI graphs reachable from
/// an input corpus by taking subgraphs and quotients, truncated at max_grade
/// loops. Everything is computed on construction; the object is immutable
/// and may be shared across threads.
class HopfAlgebra {
 public:
  static std::shared_ptr<const HopfAlgebra> build(const std::vector<FeynmanGraph>& graphs, int max_grade,
                                                  std::size_t edge_cap = kDefaultEdgeCap);

  int max_grade() const { return max_grade_; }
  std::size_t edge_cap() const { return edge_cap_; }

  /// Sorted by loop number, then by discovery order (inputs first).
  const std::vector<Generator>& generators() const { return generators_; }
  const Generator& generator(std::size_t id) const { return generators_.at(id); }
  std::optional<std::size_t> find(const FeynmanGraph& g) const;
  /// Throws std::out_of_range when `g` is not a generator.
  std::size_t id_of(const FeynmanGraph& g) const;
  std::optional<std::size_t> find_by_name(const std::string& name) const;

  /// Input graphs left out of the generator set, with the reason.
  const std::vector<SkippedGraph>& skipped() const { return skipped_; }
  /// False when some quotient changed the overall degree of divergence.
  bool power_counting_renormalisable() const { return renormalisable_; }

  int grade(const Forest& f) const;

  /// Every forest of grade 0..max_grade, ordered by grade then lexicographically;
  /// index 0 is the unit.
  const std::vector<Forest>& forests() const { return forests_; }
  /// Indices into forests() of grade exactly n.
  const std::vector<std::size_t>& forests_of_grade(int n) const { return by_grade_.at(n); }
  /// Throws std::out_of_range for a forest beyond max_grade.
  std::size_t forest_index(const Forest& f) const;

  /// Delta(G) for a generator: G x 1 + 1 x G + sum over spinneys.
  const TensorSum& coproduct(std::size_t generator) const { return gen_coproduct_.at(generator); }
  /// The spinney part of Delta(G): terms with both sides nontrivial.
  const std::vector<TensorTerm>& reduced_coproduct(std::size_t generator) const {
    return reduced_.at(generator);
  }
  /// Delta on a forest of grade <= max_grade, as the product of its factors' coproducts.
  const TensorSum& coproduct(const Forest& f) const { return forest_coproduct_.at(forest_index(f)); }
  const TensorSum& coproduct_at(std::size_t forest_idx) const { return forest_coproduct_.at(forest_idx); }

  std::string forest_name(const Forest& f) const;

 private:
  HopfAlgebra() = default;

  int max_grade_ = 0;
  std::size_t edge_cap_ = kDefaultEdgeCap;
  bool renormalisable_ = true;
  std::vector<Generator> generators_;
  std::map<std::string, std::size_t> by_key_;
  std::vector<SkippedGraph> skipped_;
  std::vector<Forest> forests_;
  std::map<Forest, std::size_t> forest_ids_;
  std::vector<std::vector<std::size_t>> by_grade_;
  std::vector<TensorSum> gen_coproduct_;
  std::vector<std::vector<TensorTerm>> reduced_;
  std::vector<TensorSum> forest_coproduct_;
};

/// Product of tensor sums in H x H.
TensorSum tensor_product(const TensorSum& a, const TensorSum& b);

}  // namespace renorm
