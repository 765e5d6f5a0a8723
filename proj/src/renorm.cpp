#include "renorm/renorm.hpp"

#include "renorm/degree.hpp"

namespace renorm {

namespace {

void check_grade(const LinearForm& phi, int max_grade) {
  if (max_grade < 0) throw std::invalid_argument("max grade must be nonnegative");
  if (max_grade > phi.algebra().max_grade())
    throw std::out_of_range("max grade " + std::to_string(max_grade) + " exceeds the Hopf algebra grade " +
                            std::to_string(phi.algebra().max_grade()));
  phi.require_grade(max_grade, "renormalisation");
}

void check_degrees(const BoundScheme& scheme, int max_grade) {
  const SubtractionScheme& s = scheme.scheme();
  if (s.model() != Model::B) return;
  const HopfAlgebra& h = scheme.algebra();
  for (const auto& gen : h.generators()) {
    if (gen.loops > max_grade) continue;
    const DegreeValidation v = validate_degree_function(s.degree_function(), gen.graph, h.edge_cap());
    if (!v.valid) {
      const auto& w = *v.witness;
      throw std::invalid_argument("subtraction degree '" + s.degree_function().name() + "' is invalid on " +
                                  w.subgraph.name() + ": a = " + std::to_string(w.degree) + " < " +
                                  std::to_string(w.bound));
    }
  }
}

TargetElement times(TargetElement x, std::uint64_t multiplicity) {
  if (multiplicity != 1) x *= Rational(static_cast<unsigned long>(multiplicity));
  return x;
}

}  // namespace

RenormResult bogoliubov(const LinearForm& phi, const BoundScheme& scheme, int max_grade) {
  check_grade(phi, max_grade);
  scheme.scheme().require(phi.target());
  check_degrees(scheme, max_grade);
  const HopfAlgebra& h = phi.algebra();
  const std::size_t n = h.generators().size();
  std::vector<TargetElement> c(n), rbar(n), r(n);
  auto c_of = [&](const Forest& f) {
    TargetElement v = TargetElement::one();
    for (std::size_t id : f) v = v * c[id];
    return v;
  };
  for (std::size_t id = 0; id < n; ++id) {
    if (h.generator(id).loops > max_grade) continue;
    TargetElement v = phi.on_generator(id);
    for (const auto& t : h.reduced_coproduct(id)) v += times(c_of(t.left) * phi(t.right), t.multiplicity);
    c[id] = -scheme.minus(id, v);
    r[id] = scheme.plus(id, v);
    rbar[id] = std::move(v);
  }
  return {LinearForm::character(phi.algebra_ptr(), std::move(c), phi.target(), max_grade), std::move(rbar),
          LinearForm::character(phi.algebra_ptr(), std::move(r), phi.target(), max_grade), scheme.scheme().name(),
          max_grade};
}

TargetElement forest_expansion_oracle(const LinearForm& phi, const SubtractionScheme& scheme, const FeynmanGraph& g) {
  scheme.require(phi.target());
  const HopfAlgebra& h = phi.algebra();
  auto value = [&](const FeynmanGraph& x) { return phi.on_generator(h.id_of(x)); };
  auto counterterm = [&](auto&& self, const FeynmanGraph& gamma) -> TargetElement {
    TargetElement rbar = value(gamma);
    for (const auto& s : wood(gamma, h.edge_cap()).spinneys) {
      TargetElement term = value(contract(gamma, s));
      for (const auto& part : s.parts) term = term * self(self, subgraph_graph(gamma, part));
      rbar += term;
    }
    return -scheme.minus(gamma, rbar);
  };
  return counterterm(counterterm, g);
}

std::string to_string(Method m) {
  switch (m) {
    case Method::bogoliubov: return "bogoliubov";
    case Method::exp_left: return "exp-left";
    case Method::exp_right: return "exp-right";
  }
  return "unknown";
}

std::optional<Method> parse_method(const std::string& text) {
  for (Method m : {Method::bogoliubov, Method::exp_left, Method::exp_right})
    if (to_string(m) == text) return m;
  return std::nullopt;
}

BwhPair bwh_pair(const RenormResult& r) { return {r.counterterm, r.renormalised, Method::bogoliubov}; }

BwhPair normalised(const BwhPair& pair) {
  if (pair.method != Method::exp_right) return pair;
  return {char_inverse(pair.minus), char_inverse(pair.plus), pair.method};
}

RegularityResult regularity_check(const LinearForm& phi, const BoundScheme& scheme, int n, Regularity mode) {
  const LinearForm projected =
      lift_projector(scheme, phi, mode == Regularity::regular ? Side::plus : Side::minus);
  const HopfAlgebra& h = phi.algebra();
  for (int g = 0; g <= n; ++g)
    for (std::size_t i : h.forests_of_grade(g))
      if (!(projected.at_forest(i) == phi.at_forest(i))) return {false, h.forests()[i]};
  return {};
}

namespace {

enum class Orientation { left, right };

ExponentialResult exponential(const LinearForm& phi, const BoundScheme& scheme, int max_grade, bool assert_guarantees,
                              Execution ex, Orientation side) {
  check_grade(phi, max_grade);
  scheme.scheme().require(phi.target());
  if (phi.kind() != FormKind::character) throw std::invalid_argument("exponential method needs a character");
  const HopfAlgebra& h = phi.algebra();
  const LinearForm base = phi.restricted(max_grade);
  const LinearForm e = LinearForm::counit(phi.algebra_ptr()).restricted(max_grade);

  ExponentialResult out{{e, e, side == Orientation::left ? Method::exp_left : Method::exp_right}, {}};
  ExponentialTrace& trace = out.trace;
  trace.asserted = assert_guarantees;

  auto record = [&](std::string statement, int step, const RegularityResult& r) {
    trace.checks.push_back({std::move(statement), step, r.holds, r.witness});
    if (assert_guarantees && !r.holds)
      throw std::logic_error(trace.checks.back().statement + " fails at step " + std::to_string(step) +
                             (r.witness ? " on " + h.forest_name(*r.witness) : std::string()));
  };

  LinearForm phi_minus = side == Orientation::left ? char_inverse(base) : base;
  LinearForm upsilon_total = e;
  trace.phi_minus.push_back(phi_minus);
  for (int n = 1; n <= max_grade; ++n) {
    const LinearForm projected = lift_projector(scheme, phi_minus, Side::plus);
    for (std::size_t i : h.forests_of_grade(n)) {
      const Forest& f = h.forests()[i];
      if (f.size() > 1 && !projected.at_forest(i).is_zero())
        throw RecursionError("mu_" + std::to_string(n) + " is not infinitesimal: nonzero on " + h.forest_name(f), f);
    }
    std::vector<TargetElement> mu_vals(h.generators().size());
    for (std::size_t id = 0; id < mu_vals.size(); ++id)
      if (h.generator(id).loops == n) mu_vals[id] = projected.on_generator(id);
    const LinearForm mu = LinearForm::infinitesimal(phi.algebra_ptr(), std::move(mu_vals), phi.target(), max_grade);
    const LinearForm upsilon = exp_star(scale(mu, Rational(-1)), ex);
    if (side == Orientation::left) {
      phi_minus = convolve(upsilon, phi_minus, ex);
      upsilon_total = convolve(upsilon, upsilon_total, ex);
    } else {
      phi_minus = convolve(phi_minus, upsilon, ex);
      upsilon_total = convolve(upsilon_total, upsilon, ex);
    }
    trace.mu.push_back(mu);
    trace.upsilon.push_back(upsilon);
    trace.phi_minus.push_back(phi_minus);

    RegularityResult mu_regular;
    for (std::size_t id = 0; id < h.generators().size(); ++id)
      if (h.generator(id).loops == n && !(scheme.plus(id, mu.on_generator(id)) == mu.on_generator(id))) {
        mu_regular = {false, Forest{id}};
        break;
      }
    record("mu_n is a regular infinitesimal character", n, mu_regular);
    record("Upsilon_n is a regular character", n, regularity_check(upsilon, scheme, max_grade, Regularity::regular));
    record("phi-_n is n-irregular", n, regularity_check(phi_minus, scheme, n, Regularity::irregular));
  }
  record("Upsilon+(n) is a regular character", max_grade,
         regularity_check(upsilon_total, scheme, max_grade, Regularity::regular));
  if (side == Orientation::right) {
    const LinearForm rebuilt = convolve(phi_minus, char_inverse(upsilon_total), ex);
    const auto diff = first_difference(rebuilt, base, max_grade);
    record("phi = phi- * Upsilon+(n)^-1", max_grade, {!diff, diff});
  }
  out.pair.minus = phi_minus;
  out.pair.plus = upsilon_total;
  return out;
}

}  // namespace

ExponentialResult exponential_left(const LinearForm& phi, const BoundScheme& scheme, int max_grade,
                                   bool assert_guarantees, Execution ex) {
  return exponential(phi, scheme, max_grade, assert_guarantees, ex, Orientation::left);
}

ExponentialResult exponential_right(const LinearForm& phi, const BoundScheme& scheme, int max_grade,
                                    bool assert_guarantees, Execution ex) {
  return exponential(phi, scheme, max_grade, assert_guarantees, ex, Orientation::right);
}

bool bwh_verify(const LinearForm& phi, const BwhPair& pair, const BoundScheme& scheme, int n) {
  if (pair.method == Method::exp_right) {
    if (first_difference(convolve(phi, pair.plus), pair.minus, n)) return false;
  } else {
    if (first_difference(convolve(pair.minus, phi), pair.plus, n)) return false;
  }
  return regularity_check(pair.plus, scheme, n, Regularity::regular).holds &&
         regularity_check(pair.minus, scheme, n, Regularity::irregular).holds;
}

}  // namespace renorm
