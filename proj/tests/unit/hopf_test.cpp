#include "doctest.h"
#include "renorm/invariants.hpp"
#include "renorm/linear_form.hpp"
#include "renorm/synth.hpp"
#include "support.hpp"

using namespace renorm;

TEST_CASE("generator closure of the corpus") {
  const auto h = test::algebra();
  CHECK(h->generators().size() == 12);
  CHECK(h->forests().size() == 67);
  CHECK(h->forests()[0].empty());
  CHECK(h->skipped().empty());
  CHECK(h->power_counting_renormalisable());
  int last = 0;
  for (const auto& g : h->generators()) {
    CHECK(g.loops >= last);
    last = g.loops;
  }
  const auto small = test::algebra(1);
  CHECK(small->skipped().size() == 8);
}

TEST_CASE("non-divergent and non-1PI inputs are skipped") {
  const TheoryConfig phi3{"phi3", 6, 3};
  FeynmanGraph dumbbell("dumbbell", phi3, {"a", "b", "c", "d"}, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {2, 3}},
                        {{"x", 0}, {"y", 3}});
  FeynmanGraph box("box", phi3, {"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}},
                   {{"w", 0}, {"x", 1}, {"y", 2}, {"z", 3}});
  const auto h = HopfAlgebra::build({dumbbell, box}, 3);
  CHECK(h->generators().empty());
  CHECK(h->skipped().size() == 2);
  CHECK(h->forests().size() == 1);
}

TEST_CASE("coproduct examples") {
  const auto h = test::algebra();
  const TensorSum& unit = h->coproduct(Forest{});
  REQUIRE(unit.terms.size() == 1);
  CHECK(unit.terms[0] == TensorTerm{{}, {}, 1});

  const std::size_t b1 = test::id(*h, "B1");
  CHECK(h->coproduct(b1).terms == std::vector<TensorTerm>{{{}, {b1}, 1}, {{b1}, {}, 1}});
  CHECK(h->reduced_coproduct(b1).empty());

  const std::size_t o3 = test::id(*h, "O3");
  const std::size_t n2 = test::id(*h, "N2");
  const TensorSum& d = h->coproduct(o3);
  CHECK(d.total_multiplicity() == 5);
  CHECK(d.terms == std::vector<TensorTerm>{{{}, {o3}, 1}, {{b1}, {n2}, 2}, {{b1, b1}, {b1}, 1}, {{o3}, {}, 1}});

  const std::size_t sunset = test::id(*h, "sunset");
  const std::size_t f1 = test::id(*h, "F1");
  const auto& red = h->reduced_coproduct(sunset);
  REQUIRE(red.size() == 1);
  CHECK(red[0].left == Forest{f1});
  CHECK(red[0].multiplicity == 3);
  CHECK(h->generator(red[0].right[0]).loops == 1);
}

TEST_CASE("coassociativity on every forest up to grade 4") {
  const auto h = test::algebra(4);
  for (const auto& f : h->forests())
    CHECK_MESSAGE(coproduct_left_iterated(*h, f) == coproduct_right_iterated(*h, f), h->forest_name(f));
}

TEST_CASE("coproduct is multiplicative and graded") {
  const auto h = test::algebra();
  Rng rng(11);
  const auto& forests = h->forests();
  for (int k = 0; k < 200; ++k) {
    const Forest& a = forests[rng.below(forests.size())];
    const Forest& b = forests[rng.below(forests.size())];
    const Forest ab = forest_product(a, b);
    if (h->grade(ab) > h->max_grade()) continue;
    CHECK(h->coproduct(ab) == tensor_product(h->coproduct(a), h->coproduct(b)));
  }
  for (std::size_t i = 0; i < forests.size(); ++i)
    for (const auto& t : h->coproduct_at(i).terms) CHECK(h->grade(t.left) + h->grade(t.right) == h->grade(forests[i]));
}

TEST_CASE("forest bookkeeping") {
  const auto h = test::algebra();
  CHECK(forest_product({2, 5}, {1, 5}) == Forest{1, 2, 5, 5});
  CHECK(h->forest_name({}) == "1");
  CHECK(h->forests_of_grade(0).size() == 1);
  CHECK_THROWS_AS(h->forest_index({0, 0, 0, 0}), std::out_of_range);
  CHECK_THROWS_AS(h->id_of(FeynmanGraph()), std::out_of_range);
}

namespace {

struct Fixture {
  std::shared_ptr<const HopfAlgebra> h = test::algebra();
  BoundScheme bs = test::minimal(h);
  LinearForm phi = random_character(bs, 3);
  LinearForm psi = random_character(bs, 4);
  LinearForm chi = random_character(bs, 5);
  LinearForm e = LinearForm::counit(h);
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "convolution on primitives and on O3") {
  const std::size_t b1 = test::id(*h, "B1");
  const std::size_t n2 = test::id(*h, "N2");
  const std::size_t o3 = test::id(*h, "O3");
  const LinearForm c = convolve(phi, psi);
  CHECK(c.kind() == FormKind::character);
  CHECK(c.on_generator(b1) == phi.on_generator(b1) + psi.on_generator(b1));
  const auto pb = phi.on_generator(b1);
  const auto expected = phi.on_generator(o3) + psi.on_generator(o3) + pb * psi.on_generator(n2) * Rational(2) +
                        pb * pb * psi.on_generator(b1);
  CHECK(c.on_generator(o3) == expected);
}

TEST_CASE_FIXTURE(Fixture, "convolution is associative and unital") {
  for (int n = 0; n <= 3; ++n) {
    CHECK(equal_up_to(convolve(e, phi), phi, n));
    CHECK(equal_up_to(convolve(phi, e), phi, n));
  }
  const LinearForm left = convolve(convolve(phi, psi), chi);
  const LinearForm right = convolve(phi, convolve(psi, chi));
  CHECK(equal_up_to(left, right, 3));
  const LinearForm g1 = convolve(convolve(phi.as_general(), psi), chi.as_general());
  CHECK(g1.kind() == FormKind::general);
  CHECK(equal_up_to(g1, left, 3));
  CHECK(is_multiplicative(convolve(phi, psi)));
  CHECK(is_multiplicative(convolve(phi.as_general(), psi.as_general())));
}

TEST_CASE_FIXTURE(Fixture, "serial and parallel convolution agree") {
  const LinearForm a = phi.as_general();
  const LinearForm b = psi.as_general();
  CHECK(equal_up_to(convolve(a, b, Execution::serial), convolve(a, b, Execution::parallel), 3));
  const LinearForm mu = random_infinitesimal(bs, 9);
  CHECK(equal_up_to(exp_star(mu, Execution::serial), exp_star(mu, Execution::parallel), 3));
}

TEST_CASE_FIXTURE(Fixture, "inverse") {
  CHECK(equal_up_to(char_inverse(e), e, 3));
  const std::size_t b1 = test::id(*h, "B1");
  const std::size_t n2 = test::id(*h, "N2");
  const LinearForm inv = char_inverse(phi);
  CHECK(inv.on_generator(b1) == -phi.on_generator(b1));
  CHECK(inv.on_generator(n2) == -phi.on_generator(n2) + phi.on_generator(b1) * phi.on_generator(b1));
  CHECK(equal_up_to(convolve(inv, phi), e, 3));
  CHECK(equal_up_to(convolve(phi, inv), e, 3));

  // geometric series: phi^-1 = sum_k (e - phi)^{*k}
  const LinearForm d = subtract(e.as_general(), phi.as_general());
  LinearForm power = e.as_general();
  LinearForm series = e.as_general();
  for (int k = 1; k <= 3; ++k) {
    power = convolve(power, d);
    series = add(series, power);
  }
  CHECK(equal_up_to(series, inv, 3));
}

TEST_CASE_FIXTURE(Fixture, "exponential and logarithm") {
  const std::size_t b1 = test::id(*h, "B1");
  const std::size_t n2 = test::id(*h, "N2");
  CHECK(equal_up_to(exp_star(LinearForm::zero(h)), e, 3));
  CHECK(equal_up_to(log_star(e), LinearForm::zero(h), 3));
  const LinearForm mu = random_infinitesimal(bs, 21);
  const LinearForm x = exp_star(mu);
  CHECK(x.kind() == FormKind::character);
  CHECK(x.on_generator(b1) == mu.on_generator(b1));
  CHECK(x.on_generator(n2) == mu.on_generator(n2) + mu.on_generator(b1) * mu.on_generator(b1) * Rational(1, 2));
  CHECK(equal_up_to(exp_star_series(mu), x, 3));
  CHECK(log_star(phi).on_generator(b1) == phi.on_generator(b1));
  CHECK(is_infinitesimal(log_star(phi)));
  CHECK(is_infinitesimal(log_star_series(phi)));
  for (std::uint64_t s = 0; s < 10; ++s) {
    const LinearForm m = random_infinitesimal(bs, 100 + s);
    const LinearForm p = random_character(bs, 200 + s);
    CHECK(equal_up_to(log_star(exp_star(m)), m, 3));
    CHECK(equal_up_to(exp_star(log_star(p)), p, 3));
  }
  CHECK_THROWS_AS(exp_star(phi), std::invalid_argument);
  CHECK_THROWS_AS(log_star(mu), std::invalid_argument);
}

TEST_CASE_FIXTURE(Fixture, "grade bounds are enforced") {
  const LinearForm low = phi.restricted(1);
  CHECK_THROWS_AS(low(h->forests().back()), std::out_of_range);
  CHECK_THROWS_AS(LinearForm::character(h, {}, TargetKind::momentum), std::invalid_argument);
  const LinearForm part = phi.as_general().graded_part(2);
  for (std::size_t i : h->forests_of_grade(1)) CHECK(part.at_forest(i).is_zero());
}

TEST_CASE("targets must match") {
  const auto h = test::algebra();
  const LinearForm a = random_character(test::pole(h), 1);
  const LinearForm b = random_character(test::minimal(h), 1);
  CHECK(a.target() == TargetKind::laurent);
  CHECK(b.target() == TargetKind::momentum);
  CHECK_THROWS_AS(convolve(a, b), std::invalid_argument);
  CHECK_NOTHROW(convolve(a, LinearForm::counit(h)));
}
