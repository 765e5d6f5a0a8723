#pragma once

#include <string_view>

#include "renorm/graph.hpp"

namespace renorm {

/// Source text of the shipped corpus (corpus/reference.graph).
std::string_view builtin_corpus_text();

/// The shipped corpus, parsed.
GraphCorpus builtin_corpus();

/// Graph of the shipped corpus by name; throws std::out_of_range.
FeynmanGraph builtin_graph(std::string_view name);

}  // namespace renorm
