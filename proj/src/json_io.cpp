#include "renorm/json_io.hpp"

#include <map>

namespace renorm {

Json to_json(const TheoryConfig& t) {
  return {{"name", t.name}, {"dimension", t.dimension}, {"valence", t.valence}};
}

Json to_json(const FeynmanGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({g.vertices()[e.u], g.vertices()[e.v]});
  Json legs = Json::array();
  for (const auto& l : g.legs()) legs.push_back({l.label, g.vertices()[l.vertex]});
  return {{"name", g.name()}, {"theory", g.theory().name}, {"vertices", g.vertices()}, {"edges", edges},
          {"legs", legs}};
}

Json corpus_to_json(const GraphCorpus& c) {
  Json theories = Json::array();
  for (const auto& t : c.theories) theories.push_back(to_json(t));
  Json graphs = Json::array();
  for (const auto& g : c.graphs) graphs.push_back(to_json(g));
  return {{"theories", theories}, {"graphs", graphs}};
}

namespace {

TheoryConfig theory_from_json(const Json& j) {
  if (!j.is_object()) throw JsonInputError("theory must be an object");
  for (const char* field : {"name", "dimension", "valence"})
    if (!j.contains(field)) throw JsonInputError(std::string("theory lacks \"") + field + "\"");
  if (!j["name"].is_string() || !j["dimension"].is_number_integer() || !j["valence"].is_number_integer())
    throw JsonInputError("theory fields have the wrong type");
  TheoryConfig t{j["name"].get<std::string>(), j["dimension"].get<int>(), j["valence"].get<int>()};
  try {
    validate_theory(t);
  } catch (const std::invalid_argument& e) {
    throw JsonInputError(e.what());
  }
  return t;
}

FeynmanGraph graph_from_json(const Json& j, const std::map<std::string, TheoryConfig>& theories, std::size_t index) {
  const std::string where = "graph #" + std::to_string(index);
  if (!j.is_object()) throw JsonInputError(where + " must be an object");
  const std::string name = j.value("name", "G" + std::to_string(index));
  if (!j.contains("theory")) throw JsonInputError("graph " + name + " lacks \"theory\"");
  TheoryConfig theory;
  if (j["theory"].is_string()) {
    auto it = theories.find(j["theory"].get<std::string>());
    if (it == theories.end())
      throw JsonInputError("graph " + name + " refers to unknown theory '" + j["theory"].get<std::string>() + "'");
    theory = it->second;
  } else {
    theory = theory_from_json(j["theory"]);
  }
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw JsonInputError("graph " + name + " lacks \"vertices\"");
  std::vector<std::string> vertices;
  std::map<std::string, std::size_t> index_of;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw JsonInputError("graph " + name + ": vertex names must be strings");
    if (!index_of.emplace(v.get<std::string>(), vertices.size()).second)
      throw JsonInputError("graph " + name + ": duplicate vertex '" + v.get<std::string>() + "'");
    vertices.push_back(v.get<std::string>());
  }
  auto vertex = [&](const Json& v) {
    if (!v.is_string() || !index_of.contains(v.get<std::string>()))
      throw JsonInputError("graph " + name + ": unknown vertex " + v.dump());
    return index_of.at(v.get<std::string>());
  };
  std::vector<Edge> edges;
  for (const auto& e : j.value("edges", Json::array())) {
    if (!e.is_array() || e.size() != 2) throw JsonInputError("graph " + name + ": an edge must be [u, v]");
    edges.push_back({vertex(e[0]), vertex(e[1])});
  }
  std::vector<Leg> legs;
  for (const auto& l : j.value("legs", Json::array())) {
    if (!l.is_array() || l.size() != 2 || !l[0].is_string())
      throw JsonInputError("graph " + name + ": a leg must be [label, vertex]");
    legs.push_back({l[0].get<std::string>(), vertex(l[1])});
  }
  FeynmanGraph g(name, theory, std::move(vertices), std::move(edges), std::move(legs));
  try {
    validate_graph(g, true);
  } catch (const GraphValidationError& e) {
    throw JsonInputError(e.what());
  }
  return g;
}

}  // namespace

GraphCorpus corpus_from_json(const Json& j) {
  GraphCorpus out;
  if (!j.is_object()) throw JsonInputError("graph document must be a JSON object");
  std::map<std::string, TheoryConfig> theories;
  for (const auto& t : j.value("theories", Json::array())) {
    TheoryConfig th = theory_from_json(t);
    if (!theories.emplace(th.name, th).second) throw JsonInputError("duplicate theory '" + th.name + "'");
    out.theories.push_back(th);
  }
  // The two standard theories may be referenced without a declaration.
  for (const TheoryConfig& th : {TheoryConfig{"phi3_6", 6, 3}, TheoryConfig{"phi4_4", 4, 4}})
    theories.emplace(th.name, th);
  if (!j.contains("graphs")) {
    out.graphs.push_back(graph_from_json(j, theories, 0));
    return out;
  }
  if (!j["graphs"].is_array()) throw JsonInputError("\"graphs\" must be an array");
  std::size_t index = 0;
  for (const auto& g : j["graphs"]) out.graphs.push_back(graph_from_json(g, theories, index++));
  return out;
}

Json to_json(const LaurentSeries& s) {
  Json eps = Json::object();
  for (const auto& [n, c] : s.coefficients()) eps[std::to_string(n)] = to_string(c);
  return {{"eps", eps}, {"trunc", s.is_exact() ? Json(nullptr) : Json(s.truncation())}};
}

LaurentSeries laurent_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("eps") || !j["eps"].is_object())
    throw JsonInputError("Laurent series must be {\"eps\": {...}, \"trunc\": ...}");
  const Json trunc = j.value("trunc", Json(nullptr));
  if (!trunc.is_null() && !trunc.is_number_integer()) throw JsonInputError("\"trunc\" must be an integer or null");
  const int t = trunc.is_null() ? LaurentSeries::kExact : trunc.get<int>();
  LaurentSeries s = LaurentSeries::zero(t);
  for (const auto& [key, value] : j["eps"].items()) {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw JsonInputError("bad exponent '" + key + "'");
    }
    if (!value.is_string()) throw JsonInputError("coefficients must be rational strings");
    try {
      s += LaurentSeries::term(n, parse_rational(value.get<std::string>()), t);
    } catch (const std::invalid_argument& e) {
      throw JsonInputError(e.what());
    }
  }
  return s;
}

Json to_json(const MomentumPolynomial& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json mono = Json::object();
    for (const auto& [name, e] : m.powers()) mono[name] = e;
    out.push_back({{"mono", mono}, {"coef", to_json(c)}});
  }
  return out;
}

MomentumPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw JsonInputError("momentum polynomial must be an array of terms");
  MomentumPolynomial p;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("mono") || !term.contains("coef") || !term["mono"].is_object())
      throw JsonInputError("polynomial term must be {\"mono\": {...}, \"coef\": ...}");
    std::vector<std::pair<std::string, int>> powers;
    for (const auto& [name, e] : term["mono"].items()) {
      if (!e.is_number_integer() || e.get<int>() < 0) throw JsonInputError("bad exponent for " + name);
      powers.emplace_back(name, e.get<int>());
    }
    p.add_term(Monomial(std::move(powers)), laurent_from_json(term["coef"]));
  }
  return p;
}

Json to_json(const LinearForm& f) {
  const HopfAlgebra& h = f.algebra();
  Json generators = Json::object();
  Json values = Json::object();
  for (const auto& gen : h.generators())
    if (gen.loops <= f.grade()) generators[gen.graph.name()] = gen.key;
  if (f.kind() == FormKind::general) {
    for (int g = 0; g <= f.grade(); ++g)
      for (std::size_t i : h.forests_of_grade(g)) values[h.forest_name(h.forests()[i])] = to_json(f.at_forest(i));
  } else {
    for (std::size_t id = 0; id < h.generators().size(); ++id)
      if (h.generator(id).loops <= f.grade()) values[h.generator(id).graph.name()] = to_json(f.on_generator(id));
  }
  return {{"kind", to_string(f.kind())}, {"target", to_string(f.target())}, {"grade", f.grade()},
          {"generators", generators}, {"values", values}};
}

}  // namespace renorm
