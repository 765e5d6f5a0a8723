#include "renorm/corpus.hpp"

#include <stdexcept>
#include <string>

#include "renorm/dsl.hpp"

namespace renorm {

GraphCorpus builtin_corpus() {
  ParseResult r = parse_graph_dsl(builtin_corpus_text());
  if (!r.ok()) throw std::logic_error("built-in corpus: " + format_diagnostic(r.diagnostics.front(), "reference.graph"));
  return {std::move(r.theories), std::move(r.graphs)};
}

FeynmanGraph builtin_graph(std::string_view name) {
  static const GraphCorpus corpus = builtin_corpus();
  for (const auto& g : corpus.graphs)
    if (g.name() == name) return g;
  throw std::out_of_range("no graph named '" + std::string(name) + "' in the built-in corpus");
}

}  // namespace renorm
