#include "renorm/classify.hpp"

#include <stdexcept>

#include "renorm/canonical.hpp"
#include "renorm/random.hpp"

namespace renorm {

std::string to_string(Verdict v) { return v == Verdict::confirmed ? "confirmed" : "refuted"; }

std::string spinney_text(const Spinney& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.parts.size(); ++i) {
    if (i) out += ",";
    out += "[";
    const auto edges = s.parts[i].edge_indices();
    for (std::size_t j = 0; j < edges.size(); ++j) out += (j ? "," : "") + std::to_string(edges[j]);
    out += "]";
  }
  return out + "}";
}

namespace {

struct Part {
  std::vector<std::string> symbols;
  int degree = 0;
  int loops = 0;
};

struct Task {
  std::size_t graph = 0;
  std::size_t spinney_index = 0;
  std::string spinney;
  std::uint64_t graph_hash = 0;
  std::vector<Part> parts;
  std::vector<std::string> symbols;  // Gamma's own
  int degree = 0;                    // a(Gamma)
  int quotient_degree = 0;           // a(Gamma/S)
  int loops = 0;
};

struct SampleResult {
  bool ct = true;
  bool rt = true;
  std::vector<TargetElement> x_parts;
  TargetElement x_whole;
  TargetElement ct_lhs, ct_rhs, rt_lhs, rt_rhs;
};

TargetElement extremal(const std::vector<std::string>& symbols, int degree, Model model) {
  if (model == Model::A) {
    LaurentSeries s = LaurentSeries::term(-1, Rational(1)) + LaurentSeries(Rational(1));
    return TargetElement(s);
  }
  TargetElement x = TargetElement::term(Monomial::variable(symbols.front(), degree), LaurentSeries(Rational(1)));
  x += TargetElement::term(Monomial::variable(symbols.front(), degree + 1), LaurentSeries(Rational(1)));
  return x;
}

TargetElement draw(Rng& rng, const std::vector<std::string>& symbols, int max_degree, int loops, Model model) {
  if (model == Model::A) return TargetElement(random_laurent(rng, loops));
  return random_polynomial(rng, symbols, 0, max_degree, loops);
}

SampleResult run_sample(const SubtractionScheme& scheme, const Task& task, std::size_t sample, std::uint64_t seed) {
  const Model model = scheme.model();
  SampleResult r;
  Rng rng(seed);
  const int whole_degree = std::max(task.degree, task.quotient_degree) + 2;
  for (const auto& p : task.parts)
    r.x_parts.push_back(sample == 0 ? extremal(p.symbols, p.degree, model)
                                    : draw(rng, p.symbols, p.degree + 2, p.loops, model));
  r.x_whole = sample == 0 ? extremal(task.symbols, task.quotient_degree, model)
                          : draw(rng, task.symbols, whole_degree, task.loops, model);

  auto product = [&](bool minus) {
    TargetElement prod = minus ? scheme.minus(task.quotient_degree, r.x_whole)
                               : scheme.plus(task.quotient_degree, r.x_whole);
    for (std::size_t i = 0; i < task.parts.size(); ++i) {
      const int a = task.parts[i].degree;
      prod = prod * (minus ? scheme.minus(a, r.x_parts[i]) : scheme.plus(a, r.x_parts[i]));
    }
    return prod;
  };
  r.ct_rhs = product(true);
  r.ct_lhs = scheme.minus(task.degree, r.ct_rhs);
  r.ct = r.ct_lhs == r.ct_rhs;
  r.rt_rhs = product(false);
  r.rt_lhs = scheme.plus(task.degree, r.rt_rhs);
  r.rt = r.rt_lhs == r.rt_rhs;
  return r;
}

}  // namespace

SchemeClassification classify_scheme(const SubtractionScheme& scheme, const std::vector<FeynmanGraph>& corpus,
                                     int samples, std::uint64_t seed, Execution ex, std::size_t edge_cap) {
  if (corpus.empty()) throw std::invalid_argument("classify_scheme: empty corpus");
  if (samples < 1) throw std::invalid_argument("classify_scheme: samples must be >= 1");

  SchemeClassification out;
  out.scheme = scheme.name();
  out.samples = samples;
  out.seed = seed;

  std::vector<Task> tasks;
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const FeynmanGraph& g = corpus[gi];
    if (!is_one_particle_irreducible(g)) continue;
    const PowerCounting pc = power_counting(g);
    if (pc.omega < 0 || pc.loops == 0) continue;
    ++out.graphs;
    const auto w = wood(g, edge_cap);
    for (std::size_t si = 0; si < w.spinneys.size(); ++si) {
      const Spinney& s = w.spinneys[si];
      Task t;
      t.graph = gi;
      t.spinney_index = si;
      t.spinney = spinney_text(s);
      t.graph_hash = stable_hash(canonical_key(g) + "|" + g.name());
      t.symbols = momentum_symbols(g);
      t.degree = scheme.degree(g);
      t.quotient_degree = scheme.degree(contract(g, s));
      t.loops = pc.loops;
      for (const auto& part : s.parts) {
        const FeynmanGraph sub = subgraph_graph(g, part);
        t.parts.push_back({momentum_symbols(sub), scheme.degree(sub), power_counting(sub).loops});
      }
      tasks.push_back(std::move(t));
    }
  }
  out.pairs = tasks.size();

  const std::size_t per_task = static_cast<std::size_t>(samples);
  const long total = static_cast<long>(tasks.size() * per_task);
  std::vector<unsigned char> ct_ok(total, 1), rt_ok(total, 1);
  auto body = [&](long k) {
    const Task& t = tasks[static_cast<std::size_t>(k) / per_task];
    const std::size_t sample = static_cast<std::size_t>(k) % per_task;
    const SampleResult r =
        run_sample(scheme, t, sample, derive_seed(seed, t.graph_hash, t.spinney_index, sample));
    ct_ok[k] = r.ct;
    rt_ok[k] = r.rt;
  };
  if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long k = 0; k < total; ++k) body(k);
  } else {
    for (long k = 0; k < total; ++k) body(k);
  }

  // Witnesses are recomputed serially so the report does not depend on thread timing.
  for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
    const Task& t = tasks[ti];
    auto record = [&](const std::vector<unsigned char>& ok, IdentityStatus& status, bool ct) {
      for (std::size_t s = 0; s < per_task; ++s) {
        if (ok[ti * per_task + s]) continue;
        const std::uint64_t sd = derive_seed(seed, t.graph_hash, t.spinney_index, s);
        const SampleResult r = run_sample(scheme, t, s, sd);
        status.verdict = Verdict::refuted;
        status.witnesses.push_back({corpus[t.graph].name(), t.spinney, t.spinney_index, s, sd, r.x_parts,
                                    r.x_whole, ct ? r.ct_lhs : r.rt_lhs, ct ? r.ct_rhs : r.rt_rhs});
        return;
      }
    };
    record(ct_ok, out.ct, true);
    record(rt_ok, out.rt, false);
  }
  out.ct.checks = out.rt.checks = static_cast<std::size_t>(total);
  return out;
}

}  // namespace renorm
