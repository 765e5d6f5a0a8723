#pragma once

#include <cstdint>

#include "renorm/linear_form.hpp"
#include "renorm/projection.hpp"

namespace renorm {

enum class Shape { generic, regular };

/// Random Feynman rules: on each generator G, sum over momentum degrees
/// d <= a(G)+2 of c_d(eps) m_d(p^G) (Model B) or a single Laurent series
/// (Model A), with pole order <= loop number. Values depend only on the seed
/// and the generator's canonical key. Shape::regular applies P+ afterwards.
LinearForm random_character(const BoundScheme& scheme, std::uint64_t seed, Shape shape = Shape::generic);

/// Same values as an infinitesimal character.
LinearForm random_infinitesimal(const BoundScheme& scheme, std::uint64_t seed, Shape shape = Shape::generic);

}  // namespace renorm
