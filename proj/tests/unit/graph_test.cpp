#include <algorithm>

#include "doctest.h"
#include "renorm/canonical.hpp"
#include "renorm/degree.hpp"
#include "renorm/invariants.hpp"
#include "renorm/subgraph.hpp"
#include "support.hpp"

using namespace renorm;

namespace {

const TheoryConfig phi3{"phi3", 6, 3};
const TheoryConfig phi4{"phi4", 4, 4};

Spinney spinney_of(std::initializer_list<EdgeSet> masks) {
  Spinney s;
  for (EdgeSet m : masks) s.parts.push_back({m});
  return s;
}

}  // namespace

TEST_CASE("power counting on small graphs") {
  const PowerCounting b1 = power_counting(test::graph("B1"));
  CHECK(b1 == PowerCounting{1, 2, 2, 2, 2});
  CHECK(power_counting(test::graph("F1")).omega == 0);

  FeynmanGraph tree("tree", phi3, {"a", "b"}, {{0, 1}}, {{"l1", 0}, {"l2", 0}, {"l3", 1}, {"l4", 1}});
  const PowerCounting t = power_counting(tree);
  CHECK(t.loops == 0);
  CHECK(t.omega == -2);
}

TEST_CASE("closed form of omega for every corpus graph") {
  for (const auto& g : test::corpus().graphs) {
    const PowerCounting pc = power_counting(g);
    const int expected = g.theory().valence == 4 ? 4 - pc.legs : 6 - 2 * pc.legs;
    CHECK_MESSAGE(pc.omega == expected, g.name());
    CHECK(closed_form_omega(g.theory(), pc.legs) == expected);
  }
  CHECK_FALSE(closed_form_omega({"phi5", 4, 5}, 2).has_value());
}

TEST_CASE("one-particle irreducibility") {
  CHECK(is_one_particle_irreducible(test::graph("B1")));
  CHECK(is_one_particle_irreducible(test::graph("O3")));
  FeynmanGraph dumbbell("dumbbell", phi3, {"a", "b", "c", "d"}, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {2, 3}},
                        {{"x", 0}, {"y", 3}});
  CHECK_FALSE(is_one_particle_irreducible(dumbbell));
  CHECK(bridges(dumbbell) == std::vector<std::size_t>{2});
}

TEST_CASE("validation reports every violation") {
  FeynmanGraph bad("bad", phi3, {"a", "b", "c"}, {{0, 1}}, {{"x", 0}});
  const auto issues = graph_issues(bad, true);
  CHECK(issues.size() >= 3);
  CHECK_THROWS_AS(validate_graph(bad, true), GraphValidationError);
  CHECK_THROWS_AS(validate_theory({"t", 4, 2}), std::invalid_argument);
}

TEST_CASE("divergent subgraphs") {
  CHECK(divergent_subgraphs(test::graph("B1")).empty());
  const auto o3 = divergent_subgraphs(test::graph("O3"));
  REQUIRE(o3.size() == 2);
  CHECK(o3[0].edge_indices() == std::vector<std::size_t>{1, 2});
  CHECK(o3[1].edge_indices() == std::vector<std::size_t>{5, 6});
  const auto n2 = divergent_subgraphs(test::graph("N2"));
  REQUIRE(n2.size() == 1);
  CHECK(n2[0].edge_indices() == std::vector<std::size_t>{2, 3});
}

TEST_CASE("edge cap is enforced") {
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 14; ++i) names.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i < 14; ++i) edges.push_back({i, (i + 1) % 14});
  FeynmanGraph ring("ring", phi4, names, edges, {});
  CHECK_THROWS_AS(divergent_subgraphs(ring), std::length_error);
}

TEST_CASE("woods") {
  CHECK(wood(test::graph("B1")).spinneys.empty());
  const Wood o3 = wood(test::graph("O3"));
  REQUIRE(o3.spinneys.size() == 3);
  CHECK(o3.spinneys[0] == spinney_of({0b110}));
  CHECK(o3.spinneys[1] == spinney_of({0b1100000}));
  CHECK(o3.spinneys[2] == spinney_of({0b110, 0b1100000}));
  CHECK(wood(test::graph("N2")).spinneys.size() == 1);
}

TEST_CASE("wood equals brute-force enumeration") {
  const std::size_t sizes[] = {0, 1, 2, 2, 3, 0, 1, 1, 0, 1, 3};
  std::size_t i = 0;
  for (const auto& g : test::corpus().graphs) {
    auto w = wood(g).spinneys;
    std::sort(w.begin(), w.end());
    CHECK_MESSAGE(w == brute_force_wood(g), g.name());
    CHECK_MESSAGE(w.size() == sizes[i++], g.name());
  }
}

TEST_CASE("contraction") {
  const FeynmanGraph o3 = test::graph("O3");
  CHECK(canonical_key(contract(o3, {})) == canonical_key(o3));
  const FeynmanGraph q2 = contract(o3, spinney_of({0b1100000}));
  CHECK(power_counting(q2).loops == 2);
  CHECK(canonical_key(q2) == canonical_key(test::graph("N2")));
  const FeynmanGraph q12 = contract(o3, spinney_of({0b110, 0b1100000}));
  CHECK(power_counting(q12).loops == 1);
  CHECK(canonical_key(q12) == canonical_key(test::graph("B1")));
  CHECK_THROWS_AS(contract(o3, spinney_of({0b1})), std::invalid_argument);

  const FeynmanGraph tadpole = contract(test::graph("sunset"), spinney_of({0b11}));
  CHECK(tadpole.edge_count() == 1);
  CHECK(tadpole.edges()[0].is_self_loop());
}

TEST_CASE("contraction drops loops and keeps omega") {
  for (const auto& g : test::corpus().graphs) {
    const ContractionReport r = contraction_report(g);
    CHECK_MESSAGE(r.loops_consistent, g.name());
    CHECK_MESSAGE(r.omega_preserved, g.name());
  }
}

TEST_CASE("critical oversubtraction degrees") {
  const std::pair<const char*, int> expected[] = {{"B1", 2}, {"N2", 4}, {"N3", 6}, {"O2", 2}, {"O3", 6},
                                                  {"T1", 0}, {"T2V", 0}, {"T2S", 2}, {"F1", 0}, {"F2", 0},
                                                  {"sunset", 2}};
  for (auto [name, abar] : expected) CHECK_MESSAGE(critical_degree(test::graph(name)) == abar, name);
  FeynmanGraph tree("tree", phi3, {"a", "b"}, {{0, 1}}, {{"l1", 0}, {"l2", 0}, {"l3", 1}, {"l4", 1}});
  CHECK_THROWS_AS(critical_degree(tree), std::domain_error);
}

TEST_CASE("critical degree is additive over nested and disjoint parts") {
  for (const char* name : {"N2", "N3", "O3", "T2V", "T2S", "F2"}) {
    const FeynmanGraph g = test::graph(name);
    for (const auto& s : wood(g).spinneys) {
      if (s.parts.size() != 1) continue;
      const int sub = critical_degree(subgraph_graph(g, s.parts[0]));
      CHECK_MESSAGE(critical_degree(g) == critical_degree(contract(g, s)) + sub, name);
    }
  }
}

TEST_CASE("degree functions") {
  for (const auto& g : test::corpus().graphs) {
    CHECK(validate_degree_function(DegreeFunction::minimal(), g).valid);
    CHECK(validate_degree_function(DegreeFunction::critical(), g).valid);
    CHECK(validate_degree_function(DegreeFunction::critical(), g).valid_proper_only);
  }
  const FeynmanGraph n2 = test::graph("N2");
  const FeynmanGraph b1 = test::graph("B1");
  const DegreeFunction custom = DegreeFunction::custom({{canonical_key(n2), 2}, {canonical_key(b1), 1}});
  const DegreeValidation v = validate_degree_function(custom, n2);
  CHECK_FALSE(v.valid);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->degree == 1);
  CHECK(v.witness->bound == 2);
  CHECK_THROWS_AS(DegreeFunction::custom({})(n2), std::out_of_range);
}

TEST_CASE("canonical form ignores labelling") {
  Rng rng(7);
  for (const auto& g : test::corpus().graphs)
    for (int k = 0; k < 25; ++k) CHECK(canonical_key(relabelled(g, rng)) == canonical_key(g));
  CHECK(canonical_key(test::graph("N2")) != canonical_key(test::graph("O2")));
  CHECK(canonical_key(test::graph("T2V")) != canonical_key(test::graph("T2S")));
}

TEST_CASE("canonical form separates theories") {
  const FeynmanGraph b1 = test::graph("B1");
  FeynmanGraph other("B1", {"phi3_4", 4, 3}, b1.vertices(), b1.edges(), b1.legs());
  CHECK(canonical_key(other) != canonical_key(b1));
}
