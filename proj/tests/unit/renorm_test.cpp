#include "doctest.h"
#include "renorm/renorm.hpp"
#include "renorm/synth.hpp"
#include "support.hpp"

using namespace renorm;

namespace {

bool regular(const LinearForm& f, const BoundScheme& bs, int n = 3) {
  return regularity_check(f, bs, n, Regularity::regular).holds;
}

}  // namespace

TEST_CASE("lifted projectors") {
  const auto h = test::algebra();
  const BoundScheme bs = test::minimal(h);
  const LinearForm phi = random_character(bs, 8);
  const LiftedPair lp = lift_projector(bs, phi);
  CHECK(lp.minus.kind() == FormKind::character);
  for (std::size_t id = 0; id < h->generators().size(); ++id)
    CHECK(lp.minus.on_generator(id) + lp.plus.on_generator(id) == phi.on_generator(id));
  const std::size_t b1 = test::id(*h, "B1");
  CHECK(lp.plus(Forest{b1, b1}) == lp.plus.on_generator(b1) * lp.plus.on_generator(b1));
  CHECK(regular(lp.plus, bs, 1));
  CHECK_THROWS_AS(lift_projector(bs, phi.as_general(), Side::plus), std::invalid_argument);
  CHECK_THROWS_AS(lift_projector(test::pole(h), phi, Side::plus), std::invalid_argument);
}

TEST_CASE("Bogoliubov recursion on small graphs") {
  const auto h = test::algebra();
  const BoundScheme bs = test::minimal(h);
  const LinearForm phi = random_character(bs, 12);
  const RenormResult r = bogoliubov(phi, bs, 3);
  const std::size_t b1 = test::id(*h, "B1");
  const std::size_t n2 = test::id(*h, "N2");
  CHECK(r.prepared[b1] == phi.on_generator(b1));
  CHECK(r.counterterm.on_generator(b1) == -taylor_jet(phi.on_generator(b1), 2));
  const TargetElement rbar = phi.on_generator(n2) + r.counterterm.on_generator(b1) * phi.on_generator(b1);
  CHECK(r.prepared[n2] == rbar);
  CHECK(r.renormalised.on_generator(n2) == rbar - taylor_jet(rbar, 2));
  CHECK(equal_up_to(convolve(r.counterterm, phi), r.renormalised, 3));
  CHECK_THROWS_AS(bogoliubov(phi.restricted(2), bs, 3), std::out_of_range);
}

TEST_CASE("invalid degree functions are rejected") {
  const auto h = test::algebra(2);
  std::map<std::string, int> table;
  for (const auto& g : h->generators()) table[g.key] = 0;
  const BoundScheme bs(SubtractionScheme::taylor(DegreeFunction::custom(table)), h);
  CHECK_THROWS_AS(bogoliubov(random_character(bs, 1), bs, 2), std::invalid_argument);
}

TEST_CASE("C * phi = R and the exponential method for RT schemes") {
  const auto h = test::algebra();
  for (const BoundScheme& bs : {test::minimal(h), test::pole(h)}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const LinearForm phi = random_character(bs, seed);
      const RenormResult r = bogoliubov(phi, bs, 3);
      CHECK(equal_up_to(convolve(r.counterterm, phi), r.renormalised, 3));
      const ExponentialResult ex = exponential_left(phi, bs, 3, true);
      CHECK(equal_up_to(ex.pair.minus, r.counterterm, 3));
      CHECK(equal_up_to(ex.pair.plus, r.renormalised, 3));
      CHECK(bwh_verify(phi, bwh_pair(r), bs, 3));
      CHECK(ex.trace.upsilon.size() == 3);
      for (const auto& c : ex.trace.checks) CHECK_MESSAGE(c.holds, c.statement);
    }
  }
}

TEST_CASE("forest expansion oracle") {
  const auto h = test::algebra();
  for (const BoundScheme& bs : {test::minimal(h), test::critical(h), test::pole(h)}) {
    const LinearForm phi = random_character(bs, 31);
    const RenormResult r = bogoliubov(phi, bs, 3);
    for (std::size_t id = 0; id < h->generators().size(); ++id)
      CHECK_MESSAGE(forest_expansion_oracle(phi, bs.scheme(), h->generator(id).graph) == r.counterterm.on_generator(id),
                    h->generator(id).graph.name());
  }
}

TEST_CASE("regularity is preserved under the minimal scheme") {
  const auto h = test::algebra();
  const BoundScheme bs = test::minimal(h);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const LinearForm a = lift_projector(bs, random_character(bs, 2 * seed), Side::plus);
    const LinearForm b = lift_projector(bs, random_character(bs, 2 * seed + 1), Side::plus);
    const LinearForm ab = convolve(a, b);
    CHECK(equal_up_to(lift_projector(bs, ab, Side::plus), ab, 3));
    CHECK(regular(ab, bs));
    const LinearForm mu = random_infinitesimal(bs, seed, Shape::regular);
    CHECK(regular(exp_star(mu), bs));
    const LinearForm reg = random_character(bs, seed + 500, Shape::regular);
    CHECK(regular(log_star(reg), bs));
  }
}

TEST_CASE("irregular products are not closed under the minimal scheme") {
  const auto h = test::algebra();
  const BoundScheme bs = test::minimal(h);
  bool found = false;
  for (std::uint64_t seed = 0; seed < 5 && !found; ++seed) {
    const LinearForm a = lift_projector(bs, random_character(bs, seed), Side::minus);
    const LinearForm b = lift_projector(bs, random_character(bs, seed + 50), Side::minus);
    found = !regularity_check(convolve(a, b), bs, 3, Regularity::irregular).holds;
  }
  CHECK(found);
}

TEST_CASE("uniqueness of the factorisation for the pole scheme") {
  const auto h = test::algebra();
  const BoundScheme bs = test::pole(h);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const LinearForm phi = random_character(bs, seed);
    const BwhPair b = bwh_pair(bogoliubov(phi, bs, 3));
    const BwhPair l = exponential_left(phi, bs, 3, true).pair;
    const BwhPair r = normalised(exponential_right(phi, bs, 3, true).pair);
    CHECK(equal_up_to(b.minus, l.minus, 3));
    CHECK(equal_up_to(b.plus, l.plus, 3));
    CHECK(equal_up_to(b.minus, r.minus, 3));
    CHECK(equal_up_to(b.plus, r.plus, 3));
  }
}

TEST_CASE("right exponential method") {
  const auto h = test::algebra();
  const BoundScheme bs = test::minimal(h);
  const LinearForm phi = random_character(bs, 4);
  const ExponentialResult r = exponential_right(phi, bs, 3, false);
  CHECK(r.pair.method == Method::exp_right);
  CHECK(bwh_verify(phi, r.pair, bs, 3));
  CHECK(equal_up_to(r.pair.minus, convolve(phi, r.pair.plus), 3));
  const BwhPair n = normalised(r.pair);
  CHECK(equal_up_to(convolve(n.minus, phi), n.plus, 3));
}

TEST_CASE("the dual critical scheme supports the exponential construction") {
  const auto h = test::algebra();
  const BoundScheme dual(SubtractionScheme::taylor(DegreeFunction::critical()).dual(), h);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const LinearForm phi = random_character(dual, seed);
    const ExponentialResult ex = exponential_left(phi, dual, 3, true);
    CHECK(bwh_verify(phi, ex.pair, dual, 3));
    CHECK(regularity_check(ex.pair.plus, dual, 3, Regularity::regular).holds);
    CHECK(regularity_check(ex.pair.minus, dual, 3, Regularity::irregular).holds);
  }
}

TEST_CASE("degree annihilation") {
  const auto h = test::algebra();
  for (const BoundScheme& bs : {test::minimal(h), test::critical(h)}) {
    const RenormResult r = bogoliubov(random_character(bs, 6), bs, 3);
    for (std::size_t id = 0; id < h->generators().size(); ++id)
      CHECK(taylor_jet(r.renormalised.on_generator(id), bs.degree(id)).is_zero());
  }
}

TEST_CASE("method names") {
  CHECK(parse_method("exp-left") == Method::exp_left);
  CHECK(to_string(Method::exp_right) == "exp-right");
  CHECK_FALSE(parse_method("left").has_value());
}
