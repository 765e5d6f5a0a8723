#include "renorm/workbench.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "renorm/canonical.hpp"
#include "renorm/classify.hpp"
#include "renorm/corpus.hpp"
#include "renorm/degree.hpp"
#include "renorm/dsl.hpp"
#include "renorm/invariants.hpp"
#include "renorm/json_io.hpp"
#include "renorm/synth.hpp"

namespace renorm {

namespace {

constexpr Command kCommands[] = {Command::wood,        Command::degrees, Command::coproduct, Command::classify,
                                 Command::renormalize, Command::compare, Command::selftest};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string edge_list(const SubgraphRef& s) {
  std::string out = "[";
  const auto edges = s.edge_indices();
  for (std::size_t i = 0; i < edges.size(); ++i) out += (i ? "," : "") + std::to_string(edges[i]);
  return out + "]";
}

// Display names of isomorphism classes: the first graph seen in the class.
class Names {
 public:
  explicit Names(const GraphCorpus& corpus) {
    for (const auto& g : corpus.graphs) by_key_.emplace(canonical_key(g), g.name());
  }
  std::string operator()(const FeynmanGraph& g) {
    return by_key_.emplace(canonical_key(g), g.name()).first->second;
  }

 private:
  std::map<std::string, std::string> by_key_;
};

struct Context {
  const WorkbenchConfig& config;
  GraphCorpus corpus;
  Json report = Json::object();
  std::ostringstream text;
  int exit_code = 0;
};

std::shared_ptr<const HopfAlgebra> algebra_for(const Context& ctx) {
  return HopfAlgebra::build(ctx.corpus.graphs, ctx.config.max_grade);
}

std::vector<FeynmanGraph> generator_graphs(const HopfAlgebra& h) {
  std::vector<FeynmanGraph> out;
  for (const auto& gen : h.generators()) out.push_back(gen.graph);
  return out;
}

std::string tensor_text(const HopfAlgebra& h, const TensorSum& s) {
  std::string out;
  for (std::size_t i = 0; i < s.terms.size(); ++i) {
    const auto& t = s.terms[i];
    if (i) out += " + ";
    if (t.multiplicity != 1) out += std::to_string(t.multiplicity) + " ";
    out += h.forest_name(t.left) + " (x) " + h.forest_name(t.right);
  }
  return out;
}

Json tensor_json(const HopfAlgebra& h, const TensorSum& s) {
  Json terms = Json::array();
  for (const auto& t : s.terms)
    terms.push_back({{"left", h.forest_name(t.left)}, {"right", h.forest_name(t.right)}, {"multiplicity", t.multiplicity}});
  return terms;
}

void run_wood(Context& ctx) {
  Names names(ctx.corpus);
  Json graphs = Json::array();
  for (const auto& g : ctx.corpus.graphs) {
    const Wood w = wood(g);
    Json subs = Json::array();
    for (const auto& s : divergent_subgraphs(g)) subs.push_back({{"edges", edge_list(s)}, {"class", names(subgraph_graph(g, s))}});
    Json spinneys = Json::array();
    ctx.text << g.name() << ": " << w.spinneys.size() << " spinney" << (w.spinneys.size() == 1 ? "" : "s") << "\n";
    for (const auto& s : w.spinneys) {
      Json parts = Json::array();
      std::string classes;
      for (const auto& p : s.parts) {
        parts.push_back({{"edges", edge_list(p)}, {"class", names(subgraph_graph(g, p))}});
        classes += (classes.empty() ? "" : " ") + names(subgraph_graph(g, p));
      }
      const FeynmanGraph q = contract(g, s);
      const int q_loops = power_counting(q).loops;
      spinneys.push_back({{"parts", parts}, {"quotient", names(q)}, {"quotient_loops", q_loops}});
      ctx.text << "  " << spinney_text(s) << "  parts: " << classes << "  quotient: " << names(q) << " (L=" << q_loops
               << ")\n";
    }
    graphs.push_back({{"graph", g.name()}, {"divergent_subgraphs", subs}, {"spinneys", spinneys}});
  }
  ctx.report["graphs"] = graphs;
}

void run_degrees(Context& ctx) {
  Json graphs = Json::array();
  for (const auto& g : ctx.corpus.graphs) {
    const PowerCounting pc = power_counting(g);
    const auto closed = closed_form_omega(g.theory(), pc.legs);
    Json row = {{"graph", g.name()}, {"theory", g.theory().name}, {"L", pc.loops}, {"l", pc.lines},
                {"V", pc.vertices}, {"N", pc.legs}, {"omega", pc.omega},
                {"omega_closed_form", closed ? Json(*closed) : Json(nullptr)}, {"one_pi", is_one_particle_irreducible(g)}};
    ctx.text << g.name() << ": L=" << pc.loops << " l=" << pc.lines << " V=" << pc.vertices << " N=" << pc.legs
             << " omega=" << pc.omega;
    if (pc.omega >= 0 && row["one_pi"].get<bool>()) {
      const int abar = critical_degree(g);
      const ContractionReport cr = contraction_report(g);
      row["abar"] = abar;
      row["contraction_preserves_omega"] = cr.omega_preserved;
      ctx.text << " abar=" << abar;
      if (!cr.omega_preserved) ctx.text << " (omega changes under contraction)";
    } else {
      row["abar"] = nullptr;
    }
    ctx.text << "\n";
    graphs.push_back(row);
  }
  ctx.report["graphs"] = graphs;
}

void run_coproduct(Context& ctx) {
  const auto h = algebra_for(ctx);
  Json rows = Json::array();
  for (std::size_t id = 0; id < h->generators().size(); ++id) {
    const Generator& gen = h->generator(id);
    if (!gen.from_input) continue;
    const TensorSum& s = h->coproduct(id);
    rows.push_back({{"graph", gen.graph.name()}, {"terms", tensor_json(*h, s)}, {"term_count", s.total_multiplicity()}});
    ctx.text << "Delta(" << gen.graph.name() << ") = " << tensor_text(*h, s) << "\n";
  }
  Json skipped = Json::array();
  for (const auto& s : h->skipped()) {
    skipped.push_back({{"graph", s.name}, {"reason", s.reason}});
    ctx.text << "skipped " << s.name << ": " << s.reason << "\n";
  }
  ctx.report["coproducts"] = rows;
  ctx.report["skipped"] = skipped;
}

std::string degree_text(const MomentumPolynomial& p) {
  return p.is_zero() ? "zero" : "of degree " + std::to_string(p.degree());
}

Json status_json(const IdentityStatus& s) {
  Json witnesses = Json::array();
  for (const auto& w : s.witnesses) {
    Json parts = Json::array();
    for (const auto& x : w.x_parts) parts.push_back(to_json(x));
    witnesses.push_back({{"graph", w.graph}, {"spinney", w.spinney}, {"sample", w.sample}, {"seed", w.seed},
                         {"x_parts", parts}, {"x_whole", to_json(w.x_whole)}, {"lhs", to_json(w.lhs)},
                         {"rhs", to_json(w.rhs)}, {"lhs_degree", w.lhs.degree()}, {"rhs_degree", w.rhs.degree()}});
  }
  return {{"status", to_string(s.verdict)}, {"checks", s.checks}, {"witnesses", witnesses}};
}

SchemeClassification classify_for(const Context& ctx, const SubtractionScheme& scheme, const HopfAlgebra& h) {
  return classify_scheme(scheme, generator_graphs(h), ctx.config.samples, ctx.config.seed, ctx.config.execution,
                         h.edge_cap());
}

void run_classify(Context& ctx) {
  const SubtractionScheme scheme = resolve_scheme(ctx.config.scheme, ctx.corpus);
  const auto h = algebra_for(ctx);
  const SchemeClassification c = classify_for(ctx, scheme, *h);
  ctx.report["scheme"] = c.scheme;
  ctx.report["model"] = to_string(scheme.model());
  ctx.report["graphs"] = c.graphs;
  ctx.report["pairs"] = c.pairs;
  ctx.report["samples"] = c.samples;
  ctx.report["seed"] = c.seed;
  ctx.report["ct"] = status_json(c.ct);
  ctx.report["rt"] = status_json(c.rt);
  ctx.report["st"] = to_string(c.st());
  ctx.text << "scheme " << c.scheme << " (model " << to_string(scheme.model()) << "): " << c.graphs << " graphs, "
           << c.pairs << " graph/spinney pairs, " << c.samples << " samples each\n";
  auto line = [&](const char* name, const IdentityStatus& s) {
    ctx.text << name << " " << to_string(s.verdict) << " (" << s.checks << " checks)\n";
    for (const auto& w : s.witnesses)
      ctx.text << "  witness: " << w.graph << " " << w.spinney << " sample " << w.sample << " seed " << w.seed
               << ": lhs " << degree_text(w.lhs) << ", rhs " << degree_text(w.rhs) << "\n";
  };
  line("CT", c.ct);
  line("RT", c.rt);
  ctx.text << "ST " << to_string(c.st()) << "\n";
  if (scheme.model() == Model::A) {
    int failures = 0;
    for (int i = 0; i < ctx.config.samples; ++i) {
      Rng rng(derive_seed(ctx.config.seed, 0x52425f70, static_cast<std::uint64_t>(i)));
      const LaurentSeries x = random_laurent(rng, 3);
      const LaurentSeries y = random_laurent(rng, 3);
      failures += !rota_baxter_check(x, y);
    }
    ctx.report["rota_baxter"] = {{"pairs", ctx.config.samples}, {"failures", failures}};
    ctx.text << "Rota-Baxter (weight -1): " << failures << " failures in " << ctx.config.samples << " pairs\n";
    if (failures) ctx.exit_code = 1;
  }
  if (c.ct.verdict == Verdict::refuted || c.rt.verdict == Verdict::refuted) ctx.exit_code = 1;
}

Json pair_json(const HopfAlgebra& h, const BwhPair& p, int n) {
  Json rows = Json::array();
  for (std::size_t id = 0; id < h.generators().size(); ++id) {
    if (h.generator(id).loops > n) continue;
    rows.push_back({{"graph", h.generator(id).graph.name()}, {"key", h.generator(id).key},
                    {"minus", to_json(p.minus.on_generator(id))}, {"plus", to_json(p.plus.on_generator(id))}});
  }
  return rows;
}

struct MethodRun {
  Method method;
  std::optional<BwhPair> pair;
  std::optional<RenormResult> bogoliubov;
  std::vector<GuaranteeCheck> checks;
  std::string error;
};

MethodRun run_method(Method m, const LinearForm& phi, const BoundScheme& bs, int n, Execution ex) {
  MethodRun run{m, std::nullopt, std::nullopt, {}, {}};
  try {
    if (m == Method::bogoliubov) {
      run.bogoliubov = bogoliubov(phi, bs, n);
      run.pair = bwh_pair(*run.bogoliubov);
    } else {
      ExponentialResult r = m == Method::exp_left ? exponential_left(phi, bs, n, false, ex)
                                                  : exponential_right(phi, bs, n, false, ex);
      run.pair = r.pair;
      run.checks = r.trace.checks;
    }
  } catch (const RecursionError& e) {
    run.error = e.what();
  }
  return run;
}

LinearForm character_for(const Context& ctx, const BoundScheme& bs) {
  return random_character(bs, parse_character_seed(ctx.config.character, ctx.config.seed));
}

void run_renormalize(Context& ctx) {
  const SubtractionScheme scheme = resolve_scheme(ctx.config.scheme, ctx.corpus);
  const auto h = algebra_for(ctx);
  const BoundScheme bs(scheme, h);
  const int n = ctx.config.max_grade;
  const LinearForm phi = character_for(ctx, bs);
  const MethodRun run = run_method(ctx.config.method, phi, bs, n, ctx.config.execution);
  ctx.report["scheme"] = scheme.name();
  ctx.report["method"] = to_string(run.method);
  ctx.report["max_grade"] = n;
  ctx.report["character"] = "random:seed=" + std::to_string(parse_character_seed(ctx.config.character, ctx.config.seed));
  ctx.text << "scheme " << scheme.name() << ", method " << to_string(run.method) << ", max grade " << n << "\n";
  if (!run.pair) {
    ctx.report["error"] = run.error;
    ctx.text << "recursion failed: " << run.error << "\n";
    ctx.exit_code = 1;
    return;
  }
  if (run.bogoliubov) {
    Json rows = Json::array();
    for (std::size_t id = 0; id < h->generators().size(); ++id) {
      if (h->generator(id).loops > n) continue;
      const auto& gen = h->generator(id);
      rows.push_back({{"graph", gen.graph.name()}, {"key", gen.key},
                      {"C", to_json(run.bogoliubov->counterterm.on_generator(id))},
                      {"Rbar", to_json(run.bogoliubov->prepared[id])},
                      {"R", to_json(run.bogoliubov->renormalised.on_generator(id))}});
      ctx.text << gen.graph.name() << ":\n  C    = " << run.bogoliubov->counterterm.on_generator(id).to_string()
               << "\n  Rbar = " << run.bogoliubov->prepared[id].to_string()
               << "\n  R    = " << run.bogoliubov->renormalised.on_generator(id).to_string() << "\n";
    }
    ctx.report["results"] = rows;
  } else {
    ctx.report["results"] = pair_json(*h, *run.pair, n);
    for (std::size_t id = 0; id < h->generators().size(); ++id) {
      if (h->generator(id).loops > n) continue;
      ctx.text << h->generator(id).graph.name() << ":\n  phi- = " << run.pair->minus.on_generator(id).to_string()
               << "\n  phi+ = " << run.pair->plus.on_generator(id).to_string() << "\n";
    }
    Json checks = Json::array();
    for (const auto& c : run.checks) {
      checks.push_back({{"statement", c.statement}, {"step", c.step}, {"holds", c.holds},
                        {"witness", c.witness ? Json(h->forest_name(*c.witness)) : Json(nullptr)}});
      if (!c.holds) ctx.text << "check failed at step " << c.step << ": " << c.statement << "\n";
    }
    ctx.report["checks"] = checks;
  }
  const bool verified = bwh_verify(phi, *run.pair, bs, n);
  ctx.report["verified"] = verified;
  ctx.text << "factorisation " << (verified ? "verified" : "NOT verified") << " up to grade " << n << "\n";
  if (!verified) ctx.exit_code = 1;
}

void run_compare(Context& ctx) {
  const SubtractionScheme scheme = resolve_scheme(ctx.config.scheme, ctx.corpus);
  const auto h = algebra_for(ctx);
  const BoundScheme bs(scheme, h);
  const int n = ctx.config.max_grade;
  const LinearForm phi = character_for(ctx, bs);
  const SchemeClassification c = classify_for(ctx, scheme, *h);
  const bool rt = c.rt.verdict == Verdict::confirmed;
  const bool st = c.st() == Verdict::confirmed;

  std::vector<MethodRun> runs;
  for (Method m : {Method::bogoliubov, Method::exp_left, Method::exp_right})
    runs.push_back(run_method(m, phi, bs, n, ctx.config.execution));

  ctx.report["scheme"] = scheme.name();
  ctx.report["max_grade"] = n;
  ctx.report["classification"] = {{"ct", to_string(c.ct.verdict)}, {"rt", to_string(c.rt.verdict)}, {"st", to_string(c.st())}};
  ctx.text << "scheme " << scheme.name() << ": CT " << to_string(c.ct.verdict) << ", RT " << to_string(c.rt.verdict)
           << ", ST " << to_string(c.st()) << "\n";

  Json methods = Json::object();
  std::vector<std::optional<BwhPair>> normal;
  for (const auto& r : runs) {
    Json m = Json::object();
    if (r.pair) {
      m["verified"] = bwh_verify(phi, *r.pair, bs, n);
      normal.push_back(normalised(*r.pair));
    } else {
      m["error"] = r.error;
      normal.push_back(std::nullopt);
    }
    methods[to_string(r.method)] = m;
  }
  ctx.report["methods"] = methods;

  bool all_identical = true;
  Json comparisons = Json::array();
  const std::pair<std::size_t, std::size_t> pairs[] = {{0, 1}, {0, 2}, {1, 2}};
  for (auto [a, b] : pairs) {
    const bool required = st || (rt && a == 0 && b == 1);
    Json row = {{"a", to_string(runs[a].method)}, {"b", to_string(runs[b].method)}, {"required", required}};
    bool same = false;
    if (normal[a] && normal[b]) {
      const auto dm = first_difference(normal[a]->minus, normal[b]->minus, n);
      const auto dp = first_difference(normal[a]->plus, normal[b]->plus, n);
      same = !dm && !dp;
      row["minus_first_difference"] = dm ? Json(h->forest_name(*dm)) : Json(nullptr);
      row["plus_first_difference"] = dp ? Json(h->forest_name(*dp)) : Json(nullptr);
    }
    row["identical"] = same;
    comparisons.push_back(row);
    all_identical = all_identical && same;
    ctx.text << to_string(runs[a].method) << " vs " << to_string(runs[b].method) << ": "
             << (same ? "identical" : "differ") << (required ? " (required)" : "") << "\n";
    if (required && !same) ctx.exit_code = 1;
  }
  ctx.report["comparisons"] = comparisons;
  ctx.report["all_identical"] = all_identical;
  if (all_identical) ctx.text << "all methods identical\n";
}

void run_selftest(Context& ctx) {
  Json results = Json::array();
  auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
    results.push_back({{"check", name}, {"passed", ok}, {"detail", detail}});
    ctx.text << (ok ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : ": " + detail) << "\n";
    if (!ok) ctx.exit_code = 1;
  };
  const auto& graphs = ctx.corpus.graphs;

  {
    std::string bad;
    for (const auto& g : graphs) {
      const PowerCounting pc = power_counting(g);
      const auto closed = closed_form_omega(g.theory(), pc.legs);
      if (closed && *closed != pc.omega) bad += g.name() + " ";
    }
    check("power counting matches the closed form", bad.empty(), bad);
  }
  {
    std::string bad;
    for (const auto& g : graphs) {
      auto w = wood(g).spinneys;
      std::sort(w.begin(), w.end());
      if (w != brute_force_wood(g)) bad += g.name() + " ";
    }
    check("wood equals brute-force enumeration", bad.empty(), bad);
  }
  {
    std::string bad;
    for (const auto& g : graphs) {
      if (!is_one_particle_irreducible(g) || power_counting(g).omega < 0) continue;
      const ContractionReport r = contraction_report(g);
      if (!r.loops_consistent || !r.omega_preserved) bad += g.name() + " ";
    }
    check("contraction drops loops and preserves omega", bad.empty(), bad);
  }
  {
    std::string bad;
    Rng rng(derive_seed(ctx.config.seed, 0x63616e6f6e));
    for (const auto& g : graphs)
      for (int k = 0; k < 10; ++k)
        if (canonical_key(relabelled(g, rng)) != canonical_key(g)) {
          bad += g.name() + " ";
          break;
        }
    check("canonical form is invariant under relabelling", bad.empty(), bad);
  }
  {
    const GraphCorpus back = [&] {
      ParseResult r = parse_graph_dsl(to_dsl(ctx.corpus.theories, graphs));
      return GraphCorpus{r.theories, r.graphs};
    }();
    bool ok = back.graphs.size() == graphs.size();
    for (std::size_t i = 0; ok && i < graphs.size(); ++i) ok = canonical_key(back.graphs[i]) == canonical_key(graphs[i]);
    check("graph language round trip", ok);
  }
  const auto h = algebra_for(ctx);
  {
    std::string bad;
    for (const auto& f : h->forests())
      if (coproduct_left_iterated(*h, f) != coproduct_right_iterated(*h, f)) bad += h->forest_name(f) + " ";
    check("coassociativity on every forest", bad.empty(), bad);
  }
  for (const auto& scheme : {SubtractionScheme::pole(), SubtractionScheme::taylor(DegreeFunction::minimal())}) {
    const BoundScheme bs(scheme, h);
    const int n = ctx.config.max_grade;
    const LinearForm phi = random_character(bs, ctx.config.seed);
    const LinearForm e = LinearForm::counit(h);
    const LinearForm inv = char_inverse(phi);
    check("[" + scheme.name() + "] phi^-1 * phi = e", equal_up_to(convolve(inv, phi), e, n) &&
                                                          equal_up_to(convolve(phi, inv), e, n));
    const LinearForm mu = random_infinitesimal(bs, ctx.config.seed ^ 0x6d75);
    check("[" + scheme.name() + "] log*(exp*(mu)) = mu", equal_up_to(log_star(exp_star(mu)), mu, n));
    check("[" + scheme.name() + "] exp*(log*(phi)) = phi", equal_up_to(exp_star(log_star(phi)), phi, n));
    const RenormResult r = bogoliubov(phi, bs, n);
    check("[" + scheme.name() + "] C * phi = R", equal_up_to(convolve(r.counterterm, phi), r.renormalised, n));
    const ExponentialResult left = exponential_left(phi, bs, n, false);
    check("[" + scheme.name() + "] exponential method agrees with Bogoliubov",
          equal_up_to(left.pair.minus, r.counterterm, n) && equal_up_to(left.pair.plus, r.renormalised, n));
    std::string bad;
    for (std::size_t id = 0; id < h->generators().size(); ++id)
      if (h->generator(id).loops <= n &&
          !(forest_expansion_oracle(phi, scheme, h->generator(id).graph) == r.counterterm.on_generator(id)))
        bad += h->generator(id).graph.name() + " ";
    check("[" + scheme.name() + "] forest expansion equals Bogoliubov counterterm", bad.empty(), bad);
  }
  ctx.report["checks"] = results;
}

}  // namespace

std::optional<Command> parse_command(const std::string& text) {
  for (Command c : kCommands)
    if (to_string(c) == text) return c;
  return std::nullopt;
}

std::string to_string(Command c) {
  switch (c) {
    case Command::wood: return "wood";
    case Command::degrees: return "degrees";
    case Command::coproduct: return "coproduct";
    case Command::classify: return "classify";
    case Command::renormalize: return "renormalize";
    case Command::compare: return "compare";
    case Command::selftest: return "selftest";
  }
  return "unknown";
}

void validate_config(const WorkbenchConfig& config) {
  if (config.max_grade < 1 || config.max_grade > 6) throw UsageError("--max-grade must be in 1..6");
  if (config.samples < 1) throw UsageError("--samples must be >= 1");
}

GraphCorpus load_inputs(const std::vector<std::string>& paths) {
  if (paths.empty()) return builtin_corpus();
  GraphCorpus out;
  std::string problems;
  for (const auto& path : paths) {
    const std::string text = read_file(path);
    if (ends_with(path, ".json")) {
      try {
        GraphCorpus c = corpus_from_json(Json::parse(text));
        out.theories.insert(out.theories.end(), c.theories.begin(), c.theories.end());
        out.graphs.insert(out.graphs.end(), c.graphs.begin(), c.graphs.end());
      } catch (const Json::exception& e) {
        problems += path + ": error: malformed JSON: " + e.what() + "\n";
      } catch (const JsonInputError& e) {
        problems += path + ": error: " + e.what() + "\n";
      }
      continue;
    }
    ParseResult r = parse_graph_dsl(text);
    for (const auto& d : r.diagnostics) problems += format_diagnostic(d, path) + "\n";
    out.theories.insert(out.theories.end(), r.theories.begin(), r.theories.end());
    out.graphs.insert(out.graphs.end(), r.graphs.begin(), r.graphs.end());
  }
  if (!problems.empty()) throw InputError(problems.substr(0, problems.size() - 1));
  return out;
}

SubtractionScheme resolve_scheme(const std::string& scheme, const GraphCorpus& corpus) {
  if (scheme == "minimal") return SubtractionScheme::taylor(DegreeFunction::minimal());
  if (scheme == "critical") return SubtractionScheme::taylor(DegreeFunction::critical());
  if (scheme == "pole") return SubtractionScheme::pole();
  if (scheme.rfind("custom:", 0) == 0) {
    const std::string path = scheme.substr(7);
    Json j;
    try {
      j = Json::parse(read_file(path));
    } catch (const Json::exception& e) {
      throw UsageError(path + ": malformed JSON: " + e.what());
    }
    if (!j.is_object() || !j.contains("degrees") || !j["degrees"].is_object())
      throw UsageError(path + ": expected {\"degrees\": {...}}");
    std::map<std::string, std::string> by_name;
    for (const auto& g : corpus.graphs) by_name.emplace(g.name(), canonical_key(g));
    std::map<std::string, int> table;
    for (const auto& [name, value] : j["degrees"].items()) {
      if (!value.is_number_integer()) throw UsageError(path + ": degree of " + name + " must be an integer");
      auto it = by_name.find(name);
      table[it == by_name.end() ? name : it->second] = value.get<int>();
    }
    return SubtractionScheme::taylor(DegreeFunction::custom(std::move(table)));
  }
  throw UsageError("unknown scheme '" + scheme + "' (expected minimal, critical, pole or custom:<file>)");
}

std::uint64_t parse_character_seed(const std::string& request, std::uint64_t fallback) {
  if (request.empty()) return fallback;
  const std::string prefix = "random:seed=";
  if (request.rfind(prefix, 0) != 0) throw UsageError("character must be random:seed=N");
  try {
    std::size_t used = 0;
    const std::string digits = request.substr(prefix.size());
    const unsigned long long v = std::stoull(digits, &used);
    if (used != digits.size() || digits.empty() || digits[0] == '-') throw std::invalid_argument(digits);
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad seed in '" + request + "'");
  }
}

CommandResult execute_command(const WorkbenchConfig& config, Command command, const std::vector<std::string>& inputs) {
  CommandResult out;
  try {
    validate_config(config);
    Context ctx{config, load_inputs(inputs), Json::object(), {}, 0};
    if (ctx.corpus.graphs.empty() && command != Command::selftest) throw UsageError("no graphs in the input");
    ctx.report["command"] = to_string(command);
    switch (command) {
      case Command::wood: run_wood(ctx); break;
      case Command::degrees: run_degrees(ctx); break;
      case Command::coproduct: run_coproduct(ctx); break;
      case Command::classify: run_classify(ctx); break;
      case Command::renormalize: run_renormalize(ctx); break;
      case Command::compare: run_compare(ctx); break;
      case Command::selftest: run_selftest(ctx); break;
    }
    ctx.report["exit_code"] = ctx.exit_code;
    out.exit_code = ctx.exit_code;
    out.report = config.format == OutputFormat::json ? ctx.report.dump(2) + "\n" : ctx.text.str();
  } catch (const InputError& e) {
    out.exit_code = 2;
    out.errors = e.what();
  } catch (const std::exception& e) {
    out.exit_code = 2;
    out.errors = std::string("error: ") + e.what();
  }
  return out;
}

}  // namespace renorm
