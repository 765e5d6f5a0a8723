#pragma once

#include <memory>
#include <vector>

#include "renorm/linear_form.hpp"
#include "renorm/scheme.hpp"

namespace renorm {

/// A subtraction scheme with a(G) resolved once for every generator.
class BoundScheme {
 public:
  BoundScheme(SubtractionScheme scheme, std::shared_ptr<const HopfAlgebra> h);

  const SubtractionScheme& scheme() const { return scheme_; }
  const HopfAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const HopfAlgebra>& algebra_ptr() const { return algebra_; }
  int degree(std::size_t generator) const { return degrees_.at(generator); }
  const std::vector<int>& degrees() const { return degrees_; }

  TargetElement minus(std::size_t generator, const TargetElement& x) const {
    return scheme_.minus(degrees_.at(generator), x);
  }
  TargetElement plus(std::size_t generator, const TargetElement& x) const {
    return scheme_.plus(degrees_.at(generator), x);
  }

 private:
  SubtractionScheme scheme_;
  std::shared_ptr<const HopfAlgebra> algebra_;
  std::vector<int> degrees_;
};

enum class Side { minus, plus };

/// P(phi)(G1...Gk) = P^G1(phi(G1))...P^Gk(phi(Gk)). Characters map to
/// characters and infinitesimal characters to infinitesimal characters.
/// Throws std::invalid_argument for general forms or an incompatible target.
LinearForm lift_projector(const BoundScheme& scheme, const LinearForm& phi, Side side);

struct LiftedPair {
  LinearForm minus;
  LinearForm plus;
};

LiftedPair lift_projector(const BoundScheme& scheme, const LinearForm& phi);

}  // namespace renorm
