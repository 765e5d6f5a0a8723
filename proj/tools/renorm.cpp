#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "renorm/workbench.hpp"

int main(int argc, char** argv) {
  using namespace renorm;
  CLI::App app{"Hopf-algebraic renormalisation workbench"};
  WorkbenchConfig config;
  std::string command_name;
  std::string method = "bogoliubov";
  std::string format = "text";
  bool serial = false;
  std::vector<std::string> files;

  app.add_option("command", command_name, "wood | degrees | coproduct | classify | renormalize | compare | selftest")
      ->required();
  app.add_option("files", files, "graph files (.graph or .json); default is the built-in corpus");
  app.add_option("--scheme", config.scheme, "minimal | critical | pole | custom:<file>");
  app.add_option("--method", method, "bogoliubov | exp-left | exp-right");
  app.add_option("--max-grade", config.max_grade, "highest loop order");
  app.add_option("--samples", config.samples, "random samples per graph/spinney pair");
  app.add_option("--seed", config.seed, "master seed");
  app.add_option("--format", format, "json | text");
  app.add_option("--character", config.character, "random:seed=N");
  app.add_flag("--serial", serial, "disable OpenMP fan-out");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto command = parse_command(command_name);
  if (!command) {
    std::cerr << "error: unknown command '" << command_name << "'\n";
    return 2;
  }
  const auto m = parse_method(method);
  if (!m) {
    std::cerr << "error: unknown method '" << method << "'\n";
    return 2;
  }
  config.method = *m;
  if (format != "json" && format != "text") {
    std::cerr << "error: --format must be json or text\n";
    return 2;
  }
  config.format = format == "json" ? OutputFormat::json : OutputFormat::text;
  if (serial) config.execution = Execution::serial;

  const CommandResult r = execute_command(config, *command, files);
  std::cout << r.report;
  if (!r.errors.empty()) std::cerr << r.errors << "\n";
  return r.exit_code;
}
