#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "renorm/graph.hpp"
#include "renorm/linear_form.hpp"

namespace renorm {

using Json = nlohmann::json;

class JsonInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const TheoryConfig& t);
Json to_json(const FeynmanGraph& g);
Json corpus_to_json(const GraphCorpus& c);

/// Accepts {"theories": [...], "graphs": [...]} where a graph's "theory" is
/// either a theory name or an inline theory object, or a single graph
/// object with an inline theory. Throws JsonInputError naming the problem.
GraphCorpus corpus_from_json(const Json& j);

/// {"eps": {"-2": "3/1"}, "trunc": 4}; "trunc" is null for an exact series.
Json to_json(const LaurentSeries& s);
LaurentSeries laurent_from_json(const Json& j);

/// [{"mono": {"p_B1_1": 2}, "coef": <series>}, ...]
Json to_json(const MomentumPolynomial& p);
MomentumPolynomial polynomial_from_json(const Json& j);

/// {"kind", "target", "grade", "generators": {name: canonical key}, "values": {forest: value}}.
/// Characters and infinitesimal characters list generator values only.
Json to_json(const LinearForm& f);

}  // namespace renorm
