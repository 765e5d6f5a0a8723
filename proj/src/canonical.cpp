#include "renorm/canonical.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <sstream>

namespace renorm {

namespace {

struct Structure {
  std::size_t n = 0;
  std::vector<int> legs;
  std::vector<std::vector<int>> mult;  // symmetric, diagonal = self-loops
};

Structure structure_of(const FeynmanGraph& g) {
  Structure s;
  s.n = g.vertex_count();
  s.legs.assign(s.n, 0);
  s.mult.assign(s.n, std::vector<int>(s.n, 0));
  for (const auto& leg : g.legs()) ++s.legs[leg.vertex];
  for (const auto& e : g.edges()) {
    if (e.is_self_loop()) {
      ++s.mult[e.u][e.u];
    } else {
      ++s.mult[e.u][e.v];
      ++s.mult[e.v][e.u];
    }
  }
  return s;
}

// Ranks signatures; the old colour leads each signature so cell order is kept.
std::vector<int> refine(const Structure& s, std::vector<int> colours) {
  for (;;) {
    using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
    std::vector<Signature> sigs(s.n);
    for (std::size_t i = 0; i < s.n; ++i) {
      sigs[i].first = colours[i];
      for (std::size_t j = 0; j < s.n; ++j)
        if (j != i && s.mult[i][j] > 0) sigs[i].second.emplace_back(colours[j], s.mult[i][j]);
      std::sort(sigs[i].second.begin(), sigs[i].second.end());
    }
    std::vector<Signature> unique = sigs;
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    std::vector<int> next(s.n);
    for (std::size_t i = 0; i < s.n; ++i)
      next[i] = static_cast<int>(std::lower_bound(unique.begin(), unique.end(), sigs[i]) - unique.begin());
    const auto count = [](const std::vector<int>& c) {
      return std::set<int>(c.begin(), c.end()).size();
    };
    if (count(next) == count(colours)) return next;
    colours = std::move(next);
  }
}

std::vector<int> encode(const Structure& s, const std::vector<std::size_t>& order) {
  std::vector<int> code;
  code.reserve(s.n + s.n * (s.n + 1) / 2);
  for (std::size_t p = 0; p < s.n; ++p) code.push_back(s.legs[order[p]]);
  for (std::size_t p = 0; p < s.n; ++p)
    for (std::size_t q = p; q < s.n; ++q) code.push_back(s.mult[order[p]][order[q]]);
  return code;
}

struct Search {
  const Structure& s;
  std::optional<std::vector<int>> best_code;
  std::vector<std::size_t> best_order;

  void run(const std::vector<int>& colours_in) {
    const std::vector<int> colours = refine(s, colours_in);
    std::map<int, std::vector<std::size_t>> cells;
    for (std::size_t v = 0; v < s.n; ++v) cells[colours[v]].push_back(v);

    const std::vector<std::size_t>* target = nullptr;
    for (const auto& [colour, members] : cells)
      if (members.size() > 1 && (target == nullptr || members.size() < target->size()))
        target = &members;

    if (target == nullptr) {
      std::vector<std::size_t> order;
      order.reserve(s.n);
      for (const auto& [colour, members] : cells) order.push_back(members.front());
      auto code = encode(s, order);
      if (!best_code || code < *best_code) {
        best_code = std::move(code);
        best_order = std::move(order);
      }
      return;
    }
    const int split = colours[target->front()];
    for (std::size_t v : *target) {
      std::vector<int> next(s.n);
      for (std::size_t w = 0; w < s.n; ++w) next[w] = 2 * colours[w] + 1;
      next[v] = 2 * split;
      run(next);
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const FeynmanGraph& g) {
  const Structure s = structure_of(g);
  std::vector<int> initial(s.n);
  {
    std::vector<std::tuple<int, int, int>> keys(s.n);
    for (std::size_t v = 0; v < s.n; ++v) keys[v] = {s.legs[v], s.mult[v][v], g.degree(v)};
    auto unique = keys;
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    for (std::size_t v = 0; v < s.n; ++v)
      initial[v] = static_cast<int>(std::lower_bound(unique.begin(), unique.end(), keys[v]) - unique.begin());
  }
  Search search{s, std::nullopt, {}};
  if (s.n > 0) search.run(initial);

  std::ostringstream os;
  os << g.theory().name << '(' << g.theory().dimension << ',' << g.theory().valence << ")|" << s.n;
  if (search.best_code) {
    os << "|legs:";
    for (std::size_t p = 0; p < s.n; ++p) os << (p ? "," : "") << (*search.best_code)[p];
    os << "|adj:";
    for (std::size_t i = s.n; i < search.best_code->size(); ++i)
      os << (i > s.n ? "," : "") << (*search.best_code)[i];
  }
  return {os.str(), search.best_order};
}

std::uint64_t stable_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace renorm
