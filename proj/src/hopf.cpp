#include "renorm/hopf.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "renorm/canonical.hpp"

namespace renorm {

Forest forest_product(const Forest& a, const Forest& b) {
  Forest out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::uint64_t TensorSum::total_multiplicity() const {
  std::uint64_t n = 0;
  for (const auto& t : terms) n += t.multiplicity;
  return n;
}

namespace {

using TermMap = std::map<std::pair<Forest, Forest>, std::uint64_t>;

TensorSum from_map(const TermMap& m) {
  TensorSum s;
  s.terms.reserve(m.size());
  for (const auto& [lr, mult] : m) s.terms.push_back({lr.first, lr.second, mult});
  return s;
}

}  // namespace

TensorSum tensor_product(const TensorSum& a, const TensorSum& b) {
  TermMap m;
  for (const auto& x : a.terms)
    for (const auto& y : b.terms)
      m[{forest_product(x.left, y.left), forest_product(x.right, y.right)}] += x.multiplicity * y.multiplicity;
  return from_map(m);
}

std::shared_ptr<const HopfAlgebra> HopfAlgebra::build(const std::vector<FeynmanGraph>& graphs, int max_grade,
                                                      std::size_t edge_cap) {
  if (max_grade < 0) throw std::invalid_argument("max_grade must be nonnegative");
  std::shared_ptr<HopfAlgebra> h(new HopfAlgebra());
  h->max_grade_ = max_grade;
  h->edge_cap_ = edge_cap;

  // Discovery: inputs first, then subgraphs and quotients breadth-first.
  struct Found {
    FeynmanGraph graph;
    std::string key;
    int loops;
    bool from_input;
  };
  std::vector<Found> found;
  std::map<std::string, std::size_t> seen;
  std::deque<std::size_t> queue;

  auto admit = [&](const FeynmanGraph& g, bool from_input) -> std::optional<std::string> {
    if (!is_one_particle_irreducible(g)) return "not 1PI";
    const PowerCounting pc = power_counting(g);
    if (pc.loops == 0) return "tree-level graph";
    if (pc.omega < 0) return "convergent (omega = " + std::to_string(pc.omega) + ")";
    if (pc.loops > max_grade) return "loop number " + std::to_string(pc.loops) + " exceeds max grade";
    std::string key = canonical_key(g);
    if (!seen.contains(key)) {
      seen.emplace(key, found.size());
      found.push_back({g, key, pc.loops, from_input});
      queue.push_back(found.size() - 1);
    }
    return std::nullopt;
  };

  for (const auto& g : graphs)
    if (auto why = admit(g, true)) h->skipped_.push_back({g.name(), *why});

  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    const FeynmanGraph g = found[idx].graph;
    const int omega = power_counting(g).omega;
    for (const auto& s : wood(g, edge_cap).spinneys) {
      for (const auto& part : s.parts)
        if (admit(subgraph_graph(g, part), false))
          throw std::logic_error("subgraph of " + g.name() + " is not a divergent 1PI graph");
      const FeynmanGraph q = contract(g, s);
      if (power_counting(q).omega != omega) h->renormalisable_ = false;
      if (auto why = admit(q, false))
        throw std::domain_error("quotient " + q.name() + " cannot be a generator: " + *why);
    }
  }

  std::vector<std::size_t> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return found[a].loops < found[b].loops; });
  for (std::size_t i : order) {
    h->by_key_.emplace(found[i].key, h->generators_.size());
    h->generators_.push_back({found[i].graph, found[i].key, found[i].loops, found[i].from_input});
  }

  // Coproducts of generators.
  for (const auto& gen : h->generators_) {
    const std::size_t self = h->by_key_.at(gen.key);
    TermMap m;
    m[{Forest{self}, Forest{}}] += 1;
    m[{Forest{}, Forest{self}}] += 1;
    std::vector<TensorTerm> reduced;
    for (const auto& s : wood(gen.graph, edge_cap).spinneys) {
      Forest left;
      for (const auto& part : s.parts) left.push_back(h->by_key_.at(canonical_key(subgraph_graph(gen.graph, part))));
      std::sort(left.begin(), left.end());
      const std::size_t right = h->by_key_.at(canonical_key(contract(gen.graph, s)));
      m[{left, Forest{right}}] += 1;
    }
    TensorSum sum = from_map(m);
    for (const auto& t : sum.terms)
      if (!t.left.empty() && !t.right.empty()) reduced.push_back(t);
    h->gen_coproduct_.push_back(std::move(sum));
    h->reduced_.push_back(std::move(reduced));
  }

  // Forests by grade, lexicographic within a grade.
  h->by_grade_.assign(max_grade + 1, {});
  std::vector<std::vector<Forest>> graded(max_grade + 1);
  Forest current;
  auto extend = [&](auto&& self, std::size_t from, int grade) -> void {
    graded[grade].push_back(current);
    for (std::size_t id = from; id < h->generators_.size(); ++id) {
      const int g = grade + h->generators_[id].loops;
      if (g > max_grade) continue;
      current.push_back(id);
      self(self, id, g);
      current.pop_back();
    }
  };
  extend(extend, 0, 0);
  for (int n = 0; n <= max_grade; ++n) {
    std::sort(graded[n].begin(), graded[n].end());
    for (auto& f : graded[n]) {
      h->by_grade_[n].push_back(h->forests_.size());
      h->forest_ids_.emplace(f, h->forests_.size());
      h->forests_.push_back(std::move(f));
    }
  }

  for (const auto& f : h->forests_) {
    TensorSum s{{{Forest{}, Forest{}, 1}}};
    for (std::size_t id : f) s = tensor_product(s, h->gen_coproduct_[id]);
    h->forest_coproduct_.push_back(std::move(s));
  }
  return h;
}

std::optional<std::size_t> HopfAlgebra::find(const FeynmanGraph& g) const {
  auto it = by_key_.find(canonical_key(g));
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

std::size_t HopfAlgebra::id_of(const FeynmanGraph& g) const {
  if (auto id = find(g)) return *id;
  throw std::out_of_range("graph " + g.name() + " is not a generator of this Hopf algebra");
}

std::optional<std::size_t> HopfAlgebra::find_by_name(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].graph.name() == name) return i;
  return std::nullopt;
}

int HopfAlgebra::grade(const Forest& f) const {
  int g = 0;
  for (std::size_t id : f) g += generators_.at(id).loops;
  return g;
}

std::size_t HopfAlgebra::forest_index(const Forest& f) const {
  auto it = forest_ids_.find(f);
  if (it == forest_ids_.end())
    throw std::out_of_range("forest " + forest_name(f) + " is beyond grade " + std::to_string(max_grade_));
  return it->second;
}

std::string HopfAlgebra::forest_name(const Forest& f) const {
  if (f.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += "*";
    out += f[i] < generators_.size() ? generators_[f[i]].graph.name() : "#" + std::to_string(f[i]);
  }
  return out;
}

}  // namespace renorm
