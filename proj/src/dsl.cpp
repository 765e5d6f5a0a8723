#include "renorm/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <tuple>

namespace renorm {

namespace {

enum class Tok { ident, integer, lbrace, rbrace, semi, colon, end };

struct Token {
  Tok kind;
  std::string text;
  SourcePosition at;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::ident: return "'" + t.text + "'";
    case Tok::integer: return "integer " + t.text;
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::semi: return "';'";
    case Tok::colon: return "':'";
    case Tok::end: return "end of input";
  }
  return "token";
}

std::vector<Token> lex(std::string_view src, std::vector<Diagnostic>& diags) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&]() {
    if (src[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < src.size()) {
    const unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      advance();
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance();
      continue;
    }
    const SourcePosition at{line, col};
    if (std::isalpha(c) || c == '_') {
      std::string word;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        word += src[i];
        advance();
      }
      out.push_back({Tok::ident, std::move(word), at});
    } else if (std::isdigit(c) || (c == '-' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      std::string num(1, static_cast<char>(c));
      advance();
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        num += src[i];
        advance();
      }
      out.push_back({Tok::integer, std::move(num), at});
    } else if (c == '{' || c == '}' || c == ';' || c == ':') {
      const Tok k = c == '{' ? Tok::lbrace : c == '}' ? Tok::rbrace : c == ';' ? Tok::semi : Tok::colon;
      out.push_back({k, std::string(1, static_cast<char>(c)), at});
      advance();
    } else {
      std::string shown = c < 0x20 || c >= 0x7f ? "byte 0x" + std::string(1, "0123456789abcdef"[c >> 4]) +
                                                     std::string(1, "0123456789abcdef"[c & 15])
                                               : "'" + std::string(1, static_cast<char>(c)) + "'";
      diags.push_back({at, "unexpected character " + shown});
      advance();
    }
  }
  out.push_back({Tok::end, "", {line, col}});
  return out;
}

struct PendingGraph {
  std::string name;
  SourcePosition at;
  std::string theory;
  SourcePosition theory_at;
  std::vector<std::string> vertices;
  std::map<std::string, SourcePosition> vertex_at;
  std::vector<Edge> edges;
  std::vector<Leg> legs;
  bool broken = false;
};

class Parser {
 public:
  explicit Parser(std::string_view text) { tokens_ = lex(text, result_.diagnostics); }

  ParseResult run() {
    while (peek().kind != Tok::end) {
      const Token& t = peek();
      if (t.kind == Tok::ident && t.text == "theory") {
        theory_decl();
      } else if (t.kind == Tok::ident && t.text == "graph") {
        graph_decl();
      } else {
        error(t, "expected 'theory' or 'graph', found " + describe(t));
        sync_top();
      }
    }
    return std::move(result_);
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  void error(const Token& at, std::string msg) { result_.diagnostics.push_back({at.at, std::move(msg)}); }
  void error(SourcePosition at, std::string msg) { result_.diagnostics.push_back({at, std::move(msg)}); }

  bool expect(Tok kind, const char* what) {
    if (peek().kind == kind) {
      next();
      return true;
    }
    error(peek(), std::string("expected ") + what + ", found " + describe(peek()));
    return false;
  }

  std::optional<Token> expect_ident(const char* what) {
    if (peek().kind == Tok::ident) return next();
    error(peek(), std::string("expected ") + what + ", found " + describe(peek()));
    return std::nullopt;
  }

  // Skip to the start of the next top-level declaration.
  void sync_top() {
    while (peek().kind != Tok::end) {
      const Token& t = peek();
      if (t.kind == Tok::ident && (t.text == "theory" || t.text == "graph")) return;
      next();
    }
  }

  // Skip past the next ';' inside a block, stopping before '}'.
  void sync_statement() {
    while (peek().kind != Tok::end && peek().kind != Tok::rbrace) {
      if (next().kind == Tok::semi) return;
      if (peek().kind == Tok::ident && (peek().text == "theory" || peek().text == "graph")) return;
    }
  }

  std::optional<long long> integer(const char* what) {
    if (peek().kind != Tok::integer) {
      error(peek(), std::string("expected integer ") + what + ", found " + describe(peek()));
      return std::nullopt;
    }
    const Token& t = next();
    long long v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || v < -1000000 || v > 1000000) {
      error(t, std::string(what) + " " + t.text + " is out of range");
      return std::nullopt;
    }
    return v;
  }

  void theory_decl() {
    next();
    auto name = expect_ident("theory name");
    if (!name || !expect(Tok::lbrace, "'{'")) {
      sync_top();
      return;
    }
    std::optional<long long> dim, val;
    bool broken = false;
    while (peek().kind != Tok::rbrace && peek().kind != Tok::end) {
      const Token& t = peek();
      if (t.kind == Tok::ident && t.text == "graph") break;
      if (t.kind == Tok::ident && (t.text == "dimension" || t.text == "valence")) {
        const Token field = next();
        auto v = integer(field.text.c_str());
        if (!v || !expect(Tok::semi, "';'")) {
          broken = true;
          sync_statement();
          continue;
        }
        auto& slot = field.text == "dimension" ? dim : val;
        if (slot) error(field, "duplicate '" + field.text + "' in theory '" + name->text + "'");
        slot = v;
      } else {
        error(t, "expected 'dimension' or 'valence', found " + describe(t));
        broken = true;
        next();
        sync_statement();
      }
    }
    if (!expect(Tok::rbrace, "'}'")) broken = true;
    auto fail = [&](const std::string& msg) {
      error(*name, "theory '" + name->text + "' " + msg);
      broken = true;
    };
    if (!dim) fail("lacks 'dimension'");
    if (!val) fail("lacks 'valence'");
    if (dim && *dim < 1) fail("has dimension < 1");
    if (val && *val < 3) fail("has valence < 3");
    if (theories_.contains(name->text)) {
      error(*name, "duplicate theory '" + name->text + "'");
      return;
    }
    if (broken) {
      theories_.emplace(name->text, std::nullopt);
      return;
    }
    TheoryConfig th{name->text, static_cast<int>(*dim), static_cast<int>(*val)};
    theories_.emplace(name->text, th);
    result_.theories.push_back(th);
  }

  void graph_decl() {
    next();
    PendingGraph g;
    auto name = expect_ident("graph name");
    if (!name) {
      sync_top();
      return;
    }
    g.name = name->text;
    g.at = name->at;
    if (!expect(Tok::colon, "':'")) {
      sync_top();
      return;
    }
    auto theory = expect_ident("theory name");
    if (!theory || !expect(Tok::lbrace, "'{'")) {
      sync_top();
      return;
    }
    g.theory = theory->text;
    g.theory_at = theory->at;
    const std::size_t diags_before = result_.diagnostics.size();
    bool saw_vertices = false;
    while (peek().kind != Tok::rbrace && peek().kind != Tok::end) {
      const Token& t = peek();
      if (t.kind == Tok::ident && (t.text == "graph" || t.text == "theory")) break;
      if (t.kind != Tok::ident) {
        error(t, "expected 'vertices', 'edge' or 'leg', found " + describe(t));
        next();
        sync_statement();
        continue;
      }
      const Token kw = next();
      if (kw.text == "vertices") {
        if (saw_vertices) error(kw, "duplicate 'vertices' in graph '" + g.name + "'");
        saw_vertices = true;
        if (peek().kind != Tok::ident) error(peek(), "expected at least one vertex name, found " + describe(peek()));
        while (peek().kind == Tok::ident) {
          const Token v = next();
          if (g.vertex_at.contains(v.text)) {
            error(v, "duplicate vertex '" + v.text + "' in graph '" + g.name + "'");
            continue;
          }
          g.vertex_at.emplace(v.text, v.at);
          g.vertices.push_back(v.text);
        }
        if (!expect(Tok::semi, "';'")) sync_statement();
      } else if (kw.text == "edge") {
        auto a = expect_ident("vertex name");
        auto b = a ? expect_ident("vertex name") : std::nullopt;
        if (!a || !b || !expect(Tok::semi, "';'")) {
          g.broken = true;
          sync_statement();
          continue;
        }
        auto ia = vertex(g, *a), ib = vertex(g, *b);
        if (ia && ib) g.edges.push_back({*ia, *ib});
      } else if (kw.text == "leg") {
        auto a = expect_ident("vertex name");
        if (!a || !expect(Tok::semi, "';'")) {
          g.broken = true;
          sync_statement();
          continue;
        }
        if (auto ia = vertex(g, *a)) g.legs.push_back({"ext" + std::to_string(g.legs.size() + 1), *ia});
      } else {
        error(kw, "expected 'vertices', 'edge' or 'leg', found " + describe(kw));
        sync_statement();
      }
    }
    if (!expect(Tok::rbrace, "'}'")) g.broken = true;
    if (!saw_vertices) error(g.at, "graph '" + g.name + "' declares no vertices");

    std::optional<TheoryConfig> th;
    if (auto it = theories_.find(g.theory); it == theories_.end()) {
      error(g.theory_at, "graph '" + g.name + "' refers to unknown theory '" + g.theory + "'");
    } else if (!it->second) {
      error(g.theory_at, "graph '" + g.name + "' refers to invalid theory '" + g.theory + "'");
    } else {
      th = it->second;
    }
    if (graph_names_.contains(g.name)) error(g.at, "duplicate graph '" + g.name + "'");
    graph_names_.insert(g.name);

    if (th && saw_vertices && !g.vertices.empty()) {
      FeynmanGraph built(g.name, *th, g.vertices, g.edges, g.legs);
      for (const auto& issue : graph_issues(built, true)) {
        auto it = g.vertex_at.find(issue.vertex);
        error(it == g.vertex_at.end() ? g.at : it->second, "graph '" + g.name + "': " + issue.message);
      }
      if (result_.diagnostics.size() == diags_before && !g.broken) result_.graphs.push_back(std::move(built));
    }
  }

  std::optional<std::size_t> vertex(const PendingGraph& g, const Token& t) {
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
      if (g.vertices[i] == t.text) return i;
    error(t, "unknown vertex '" + t.text + "' in graph '" + g.name + "'");
    return std::nullopt;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ParseResult result_;
  std::map<std::string, std::optional<TheoryConfig>> theories_;
  std::set<std::string> graph_names_;
};

}  // namespace

ParseResult parse_graph_dsl(std::string_view text) {
  ParseResult r = Parser(text).run();
  std::stable_sort(r.diagnostics.begin(), r.diagnostics.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.at.line, a.at.column) < std::tie(b.at.line, b.at.column);
  });
  return r;
}

std::string format_diagnostic(const Diagnostic& d, const std::string& source_name) {
  return source_name + ":" + std::to_string(d.at.line) + ":" + std::to_string(d.at.column) + ": error: " + d.message;
}

std::string to_dsl(const std::vector<TheoryConfig>& theories, const std::vector<FeynmanGraph>& graphs) {
  std::string out;
  std::set<std::string> emitted;
  auto theory = [&](const TheoryConfig& t) {
    if (!emitted.insert(t.name).second) return;
    out += "theory " + t.name + " { dimension " + std::to_string(t.dimension) + "; valence " +
           std::to_string(t.valence) + "; }\n";
  };
  for (const auto& t : theories) theory(t);
  for (const auto& g : graphs) theory(g.theory());
  for (const auto& g : graphs) {
    out += "\ngraph " + g.name() + " : " + g.theory().name + " {\n  vertices";
    for (const auto& v : g.vertices()) out += " " + v;
    out += ";\n";
    for (const auto& e : g.edges()) out += "  edge " + g.vertices()[e.u] + " " + g.vertices()[e.v] + ";\n";
    for (const auto& l : g.legs()) out += "  leg " + g.vertices()[l.vertex] + ";\n";
    out += "}\n";
  }
  return out;
}

}  // namespace renorm
