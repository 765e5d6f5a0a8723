#pragma once

#include <memory>

#include "renorm/corpus.hpp"
#include "renorm/hopf.hpp"
#include "renorm/projection.hpp"

namespace test {

inline const renorm::GraphCorpus& corpus() {
  static const renorm::GraphCorpus c = renorm::builtin_corpus();
  return c;
}

inline renorm::FeynmanGraph graph(const char* name) { return renorm::builtin_graph(name); }

inline std::shared_ptr<const renorm::HopfAlgebra> algebra(int max_grade = 3) {
  return renorm::HopfAlgebra::build(corpus().graphs, max_grade);
}

inline std::size_t id(const renorm::HopfAlgebra& h, const char* name) { return *h.find_by_name(name); }

inline renorm::BoundScheme minimal(std::shared_ptr<const renorm::HopfAlgebra> h) {
  return {renorm::SubtractionScheme::taylor(renorm::DegreeFunction::minimal()), std::move(h)};
}
inline renorm::BoundScheme critical(std::shared_ptr<const renorm::HopfAlgebra> h) {
  return {renorm::SubtractionScheme::taylor(renorm::DegreeFunction::critical()), std::move(h)};
}
inline renorm::BoundScheme pole(std::shared_ptr<const renorm::HopfAlgebra> h) {
  return {renorm::SubtractionScheme::pole(), std::move(h)};
}

}  // namespace test
