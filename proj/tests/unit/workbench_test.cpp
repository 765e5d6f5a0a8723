#include <fstream>
#include <iterator>
#include <string>
#include <tuple>

#include "doctest.h"
#include "renorm/canonical.hpp"
#include "renorm/dsl.hpp"
#include "renorm/json_io.hpp"
#include "renorm/random.hpp"
#include "renorm/workbench.hpp"
#include "support.hpp"

using namespace renorm;

namespace {

std::string fixture(const char* name) { return std::string(RENORM_FIXTURE_DIR) + "/" + name; }

WorkbenchConfig json_config() {
  WorkbenchConfig c;
  c.format = OutputFormat::json;
  c.samples = 40;
  return c;
}

bool mentions(const ParseResult& r, const std::string& text) {
  for (const auto& d : r.diagnostics)
    if (d.message.find(text) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("graph language: minimal document") {
  const ParseResult r = parse_graph_dsl(
      "theory phi3 { dimension 6; valence 3; } graph B1 : phi3 { vertices v1 v2; edge v1 v2; edge v1 v2; "
      "leg v1; leg v2; }");
  REQUIRE(r.ok());
  REQUIRE(r.theories.size() == 1);
  REQUIRE(r.graphs.size() == 1);
  const PowerCounting pc = power_counting(r.graphs[0]);
  CHECK(pc.loops == 1);
  CHECK(pc.omega == 2);
  CHECK(r.graphs[0].legs()[1].label == "ext2");
}

TEST_CASE("graph language: empty input and comments") {
  CHECK(parse_graph_dsl("").ok());
  CHECK(parse_graph_dsl("# nothing here\n\n").graphs.empty());
}

TEST_CASE("graph language: valence violation names the vertex") {
  const ParseResult r = parse_graph_dsl(
      "theory phi3 { dimension 6; valence 3; }\ngraph g : phi3 {\n  vertices a b;\n  edge a b;\n  edge a b;\n"
      "  leg a;\n}\n");
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].message.find("'b'") != std::string::npos);
  CHECK(r.diagnostics[0].at.line == 3);
  CHECK(r.graphs.empty());
}

TEST_CASE("graph language: every violation is reported") {
  std::ifstream in(fixture("errors.graph"));
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const ParseResult r = parse_graph_dsl(text);
  CHECK(r.diagnostics.size() >= 4);
  CHECK(mentions(r, "phi5"));
  CHECK(mentions(r, "connected"));
  CHECK(r.graphs.empty());
  CHECK(format_diagnostic(r.diagnostics[0], "errors.graph").rfind("errors.graph:", 0) == 0);

  const ParseResult dup = parse_graph_dsl(
      "theory t { dimension 6; valence 3; } theory t { dimension 6; valence 3; }"
      "graph g : t { vertices a a; }");
  CHECK(mentions(dup, "duplicate"));
  CHECK(dup.diagnostics.size() >= 2);
}

TEST_CASE("graph language: syntax errors carry positions") {
  const ParseResult r = parse_graph_dsl("theory t { dimension six; valence 3; }\ngraph g : t { vertices a b; edge a; }\n");
  REQUIRE(r.diagnostics.size() >= 2);
  CHECK(r.diagnostics.front().at.line == 1);
  CHECK(r.diagnostics.back().at.line == 2);
  bool at_integer = false;
  for (const auto& d : r.diagnostics) at_integer = at_integer || (d.at.line == 1 && d.at.column == 22);
  CHECK(at_integer);
  for (std::size_t i = 1; i < r.diagnostics.size(); ++i)
    CHECK(std::tie(r.diagnostics[i - 1].at.line, r.diagnostics[i - 1].at.column) <=
          std::tie(r.diagnostics[i].at.line, r.diagnostics[i].at.column));
  CHECK(mentions(parse_graph_dsl("graph $"), "unexpected character"));
}

TEST_CASE("graph language: parsing is total on random input") {
  Rng rng(2024);
  const std::string corpus_text(builtin_corpus_text());
  const std::string alphabet = "theorygaphdimnsvlcx{};:#\n 0123456789-_$";
  for (int k = 0; k < 2000; ++k) {
    std::string text;
    if (k % 2 == 0) {
      text = corpus_text;
      const int edits = static_cast<int>(rng.range(1, 8));
      for (int e = 0; e < edits; ++e) {
        const std::size_t pos = rng.below(text.size());
        switch (rng.below(3)) {
          case 0: text.erase(pos, rng.below(6) + 1); break;
          case 1: text.insert(pos, 1, alphabet[rng.below(alphabet.size())]); break;
          default: text[pos] = alphabet[rng.below(alphabet.size())];
        }
      }
    } else {
      const std::size_t n = rng.below(120);
      for (std::size_t i = 0; i < n; ++i) text += static_cast<char>(rng.below(256));
    }
    ParseResult r;
    CHECK_NOTHROW(r = parse_graph_dsl(text));
    for (const auto& d : r.diagnostics) CHECK(d.at.line >= 1);
  }
}

TEST_CASE("graph language round trip") {
  const auto& c = test::corpus();
  const ParseResult back = parse_graph_dsl(to_dsl(c.theories, c.graphs));
  REQUIRE(back.ok());
  REQUIRE(back.graphs.size() == c.graphs.size());
  CHECK(back.theories == c.theories);
  for (std::size_t i = 0; i < c.graphs.size(); ++i) {
    CHECK(back.graphs[i].name() == c.graphs[i].name());
    CHECK(canonical_key(back.graphs[i]) == canonical_key(c.graphs[i]));
  }
}

TEST_CASE("JSON graph schema") {
  const GraphCorpus c = corpus_from_json(corpus_to_json(test::corpus()));
  REQUIRE(c.graphs.size() == test::corpus().graphs.size());
  for (std::size_t i = 0; i < c.graphs.size(); ++i)
    CHECK(canonical_key(c.graphs[i]) == canonical_key(test::corpus().graphs[i]));

  const Json single = Json::parse(R"({"theory": "phi3_6", "vertices": ["a", "b"], "edges": [["a","b"],["a","b"]],
                                      "legs": [["x","a"],["y","b"]]})");
  const GraphCorpus s = corpus_from_json(single);
  REQUIRE(s.graphs.size() == 1);
  CHECK(canonical_key(s.graphs[0]) == canonical_key(test::graph("B1")));

  CHECK_THROWS_AS(corpus_from_json(Json::parse(R"({"graphs": [{"theory": "nope", "vertices": []}]})")), JsonInputError);
  CHECK_THROWS_AS(corpus_from_json(Json::parse(R"({"theory": "phi3_6", "vertices": ["a"], "edges": [["a","q"]]})")),
                  JsonInputError);
  CHECK_THROWS_AS(corpus_from_json(Json::array()), JsonInputError);
}

TEST_CASE("JSON values round trip") {
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    const MomentumPolynomial p = random_polynomial(rng, {"p_a", "p_b"}, 0, 3, 2);
    CHECK(polynomial_from_json(to_json(p)) == p);
    const LaurentSeries x = random_laurent(rng, 2);
    const LaurentSeries y = laurent_from_json(to_json(x));
    CHECK(y == x);
    CHECK(y.truncation() == x.truncation());
  }
  CHECK(to_json(LaurentSeries::term(-1, 3))["trunc"].is_null());
}

TEST_CASE("workbench configuration") {
  WorkbenchConfig c;
  CHECK(c.max_grade == 3);
  CHECK(c.samples == 200);
  c.max_grade = 7;
  CHECK_THROWS_AS(validate_config(c), UsageError);
  c.max_grade = 3;
  c.samples = 0;
  CHECK_THROWS_AS(validate_config(c), UsageError);
  CHECK(parse_command("compare") == Command::compare);
  CHECK_FALSE(parse_command("frobnicate").has_value());
  CHECK(parse_character_seed("random:seed=17", 1) == 17);
  CHECK(parse_character_seed("", 5) == 5);
  CHECK_THROWS_AS(parse_character_seed("random:seed=x", 1), UsageError);
  CHECK_THROWS_AS(resolve_scheme("maximal", test::corpus()), UsageError);
}

TEST_CASE("custom degree tables") {
  const SubtractionScheme s = resolve_scheme("custom:" + fixture("degrees_n2.json"), test::corpus());
  CHECK(s.degree(test::graph("N2")) == 4);
  CHECK(s.degree(test::graph("B1")) == 2);
  WorkbenchConfig c;
  c.scheme = "custom:" + fixture("degrees_n2.json");
  c.samples = 10;
  c.max_grade = 2;
  CHECK(execute_command(c, Command::renormalize, {fixture("o3.graph")}).exit_code == 0);
  c.max_grade = 3;
  const CommandResult r = execute_command(c, Command::renormalize, {fixture("o3.graph")});
  CHECK(r.exit_code == 2);
  CHECK(r.errors.find("O3") != std::string::npos);
}

TEST_CASE("commands on the built-in corpus") {
  WorkbenchConfig c;
  const CommandResult degrees = execute_command(c, Command::degrees, {});
  REQUIRE(degrees.exit_code == 0);
  CHECK(degrees.report.find("B1: L=1 l=2 V=2 N=2 omega=2 abar=2") != std::string::npos);
  CHECK(degrees.report.find("N2: L=2 l=5 V=4 N=2 omega=2 abar=4") != std::string::npos);
  CHECK(degrees.report.find("N3: L=3 l=8 V=6 N=2 omega=2 abar=6") != std::string::npos);

  const CommandResult wood = execute_command(c, Command::wood, {fixture("o3.graph")});
  CHECK(wood.exit_code == 0);
  CHECK(wood.report.find("O3: 3 spinneys") != std::string::npos);

  c.samples = 30;
  c.scheme = "pole";
  const CommandResult compare = execute_command(c, Command::compare, {});
  CHECK(compare.exit_code == 0);
  CHECK(compare.report.find("all methods identical") != std::string::npos);
}

TEST_CASE("golden fixtures: exit codes follow the report") {
  struct Case {
    Command command;
    const char* scheme;
    const char* file;
    int exit_code;
  };
  const Case cases[] = {
      {Command::wood, "minimal", "o3.graph", 0},          {Command::degrees, "minimal", "quartic.json", 0},
      {Command::coproduct, "minimal", "o3.graph", 0},     {Command::classify, "minimal", "o3.graph", 1},
      {Command::classify, "critical", "o3.graph", 0},     {Command::classify, "pole", "o3.graph", 0},
      {Command::classify, "minimal", "quartic.json", 0},  {Command::renormalize, "minimal", "o3.graph", 0},
      {Command::compare, "pole", "o3.graph", 0},          {Command::compare, "minimal", "o3.graph", 0},
      {Command::wood, "minimal", "errors.graph", 2},      {Command::wood, "minimal", "syntax.graph", 2},
      {Command::wood, "minimal", "missing.graph", 2},     {Command::classify, "bogus", "o3.graph", 2},
  };
  for (const auto& k : cases) {
    WorkbenchConfig c = json_config();
    c.scheme = k.scheme;
    const CommandResult r = execute_command(c, k.command, {fixture(k.file)});
    INFO(to_string(k.command), " ", k.scheme, " ", k.file);
    CHECK(r.exit_code == k.exit_code);
    if (k.exit_code == 2) {
      CHECK(r.report.empty());
      CHECK_FALSE(r.errors.empty());
      continue;
    }
    const Json report = Json::parse(r.report);
    CHECK(report["exit_code"] == r.exit_code);
    if (k.command == Command::classify) {
      const bool refuted = report["ct"]["status"] == "refuted" || report["rt"]["status"] == "refuted";
      CHECK(refuted == (r.exit_code == 1));
      if (report["ct"]["status"] == "refuted") CHECK_FALSE(report["ct"]["witnesses"].empty());
    }
    if (k.command == Command::renormalize) CHECK(report["verified"] == (r.exit_code == 0));
  }
}

TEST_CASE("classify on O3 stores a witness for O3") {
  const CommandResult r = execute_command(json_config(), Command::classify, {fixture("o3.graph")});
  const Json report = Json::parse(r.report);
  bool found = false;
  for (const auto& w : report["ct"]["witnesses"]) found = found || w["graph"] == "O3";
  CHECK(found);
}

TEST_CASE("reports are byte-stable") {
  for (Command command : {Command::classify, Command::renormalize, Command::compare, Command::wood}) {
    WorkbenchConfig c = json_config();
    c.seed = 99;
    const CommandResult a = execute_command(c, command, {});
    c.execution = Execution::serial;
    const CommandResult b = execute_command(c, command, {});
    CHECK(a.report == b.report);
    c.seed = 100;
    if (command == Command::classify || command == Command::renormalize)
      CHECK(execute_command(c, command, {}).report != a.report);
  }
}

TEST_CASE("selftest passes") {
  WorkbenchConfig c;
  const CommandResult r = execute_command(c, Command::selftest, {});
  CHECK(r.exit_code == 0);
  CHECK(r.report.find("FAIL") == std::string::npos);
}
