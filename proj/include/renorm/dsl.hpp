#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "renorm/graph.hpp"

namespace renorm {

struct SourcePosition {
  int line = 1;
  int column = 1;
};

struct Diagnostic {
  SourcePosition at;
  std::string message;
};

struct ParseResult {
  std::vector<TheoryConfig> theories;
  /// Only graphs without diagnostics of their own.
  std::vector<FeynmanGraph> graphs;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

/// Parses the graph language:
///   theory NAME { dimension INT; valence INT; }
///   graph NAME : THEORY { vertices V...; edge A B; leg V; ... }
/// with '#' comments. Never throws on malformed input; every problem found is
/// reported with its line and column, and legs are labelled ext1, ext2, ...
ParseResult parse_graph_dsl(std::string_view text);

std::string format_diagnostic(const Diagnostic& d, const std::string& source_name);

/// Text that parses back to the same theories and (isomorphic) graphs.
std::string to_dsl(const std::vector<TheoryConfig>& theories, const std::vector<FeynmanGraph>& graphs);

}  // namespace renorm
