#include "renorm/synth.hpp"

#include "renorm/canonical.hpp"
#include "renorm/random.hpp"

namespace renorm {

namespace {

std::vector<TargetElement> generator_values(const BoundScheme& scheme, std::uint64_t seed, Shape shape) {
  const HopfAlgebra& h = scheme.algebra();
  const Model model = scheme.scheme().model();
  std::vector<TargetElement> vals;
  vals.reserve(h.generators().size());
  for (std::size_t id = 0; id < h.generators().size(); ++id) {
    const Generator& gen = h.generator(id);
    Rng rng(derive_seed(seed, stable_hash(gen.key)));
    TargetElement x = model == Model::A
                          ? TargetElement(random_laurent(rng, gen.loops))
                          : random_polynomial(rng, momentum_symbols(gen.graph), 0, scheme.degree(id) + 2, gen.loops);
    vals.push_back(shape == Shape::regular ? scheme.plus(id, x) : std::move(x));
  }
  return vals;
}

TargetKind target_of(const BoundScheme& scheme) {
  return scheme.scheme().model() == Model::A ? TargetKind::laurent : TargetKind::momentum;
}

}  // namespace

LinearForm random_character(const BoundScheme& scheme, std::uint64_t seed, Shape shape) {
  const HopfAlgebra& h = scheme.algebra();
  return LinearForm::character(scheme.algebra_ptr(), generator_values(scheme, seed, shape), target_of(scheme),
                               h.max_grade());
}

LinearForm random_infinitesimal(const BoundScheme& scheme, std::uint64_t seed, Shape shape) {
  const HopfAlgebra& h = scheme.algebra();
  return LinearForm::infinitesimal(scheme.algebra_ptr(), generator_values(scheme, seed, shape), target_of(scheme),
                                   h.max_grade());
}

}  // namespace renorm
