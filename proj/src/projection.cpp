#include "renorm/projection.hpp"

#include <stdexcept>

namespace renorm {

BoundScheme::BoundScheme(SubtractionScheme scheme, std::shared_ptr<const HopfAlgebra> h)
    : scheme_(std::move(scheme)), algebra_(std::move(h)) {
  degrees_.reserve(algebra_->generators().size());
  for (const auto& gen : algebra_->generators()) degrees_.push_back(scheme_.degree(gen.graph));
}

LinearForm lift_projector(const BoundScheme& scheme, const LinearForm& phi, Side side) {
  if (&scheme.algebra() != &phi.algebra()) throw std::invalid_argument("scheme bound to a different Hopf algebra");
  if (phi.kind() == FormKind::general) throw std::invalid_argument("projector lift needs a (infinitesimal) character");
  scheme.scheme().require(phi.target());
  const HopfAlgebra& h = phi.algebra();
  std::vector<TargetElement> vals(h.generators().size());
  for (std::size_t id = 0; id < vals.size(); ++id) {
    if (h.generator(id).loops > phi.grade()) continue;
    const TargetElement x = phi.on_generator(id);
    vals[id] = side == Side::minus ? scheme.minus(id, x) : scheme.plus(id, x);
  }
  if (phi.kind() == FormKind::character)
    return LinearForm::character(phi.algebra_ptr(), std::move(vals), phi.target(), phi.grade());
  return LinearForm::infinitesimal(phi.algebra_ptr(), std::move(vals), phi.target(), phi.grade());
}

LiftedPair lift_projector(const BoundScheme& scheme, const LinearForm& phi) {
  return {lift_projector(scheme, phi, Side::minus), lift_projector(scheme, phi, Side::plus)};
}

}  // namespace renorm
