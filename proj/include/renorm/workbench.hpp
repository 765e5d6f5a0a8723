#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "renorm/graph.hpp"
#include "renorm/linear_form.hpp"
#include "renorm/renorm.hpp"
#include "renorm/scheme.hpp"

namespace renorm {

enum class Command { wood, degrees, coproduct, classify, renormalize, compare, selftest };
enum class OutputFormat { json, text };

std::optional<Command> parse_command(const std::string& text);
std::string to_string(Command c);

struct WorkbenchConfig {
  int max_grade = 3;
  int samples = 200;
  std::uint64_t seed = 1;
  std::string scheme = "minimal";   // minimal | critical | pole | custom:<file>
  Method method = Method::bogoliubov;
  OutputFormat format = OutputFormat::text;
  std::string character;            // random:seed=N; empty means random:seed=<seed>
  Execution execution = Execution::parallel;
};

/// Bad flags, unreadable or malformed inputs. Maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input diagnostics already rendered as "file:line:col: error: ..." lines.
class InputError : public UsageError {
 public:
  using UsageError::UsageError;
};

struct CommandResult {
  int exit_code = 0;   // 0 confirmed/success, 1 refuted/mismatch, 2 usage or parse error
  std::string report;
  std::string errors;   // complete lines, each starting with "error:" or a source position
};

/// Throws UsageError when a field is out of range.
void validate_config(const WorkbenchConfig& config);

/// Files ending in ".json" use the JSON graph schema, all others the graph
/// language. No paths means the built-in corpus. Throws UsageError listing
/// every diagnostic.
GraphCorpus load_inputs(const std::vector<std::string>& paths);

/// Throws UsageError for an unknown scheme or a malformed custom table.
/// A custom table is {"degrees": {"<graph name or canonical key>": a, ...}}.
SubtractionScheme resolve_scheme(const std::string& scheme, const GraphCorpus& corpus);

/// Seed of a "random:seed=N" character request; throws UsageError otherwise.
std::uint64_t parse_character_seed(const std::string& request, std::uint64_t fallback);

/// Never throws: failures become exit code 2 with a message in `errors`.
CommandResult execute_command(const WorkbenchConfig& config, Command command, const std::vector<std::string>& inputs);

}  // namespace renorm
