#include "renorm/linear_form.hpp"

#include <stdexcept>

namespace renorm {

std::string to_string(FormKind k) {
  switch (k) {
    case FormKind::general: return "general";
    case FormKind::character: return "character";
    case FormKind::infinitesimal: return "infinitesimal";
  }
  return "unknown";
}

LinearForm::LinearForm(AlgebraPtr h, FormKind kind, TargetKind target, int grade,
                       std::vector<TargetElement> values)
    : algebra_(std::move(h)), kind_(kind), target_(target), values_(std::move(values)) {
  if (!algebra_) throw std::invalid_argument("linear form without a Hopf algebra");
  grade_ = std::min(grade, algebra_->max_grade());
  if (grade_ < 0) throw std::invalid_argument("negative validity grade");
  const std::size_t expected =
      kind == FormKind::general ? algebra_->forests().size() : algebra_->generators().size();
  if (values_.size() != expected)
    throw std::invalid_argument(to_string(kind) + " form needs " + std::to_string(expected) + " values, got " +
                                std::to_string(values_.size()));
  if (target == TargetKind::laurent)
    for (const auto& v : values_)
      if (!v.variables().empty()) throw std::invalid_argument("Laurent-valued form carries momentum symbols");
}

LinearForm LinearForm::counit(AlgebraPtr h) {
  const std::size_t n = h->generators().size();
  const int g = h->max_grade();
  return LinearForm(std::move(h), FormKind::character, TargetKind::any, g, std::vector<TargetElement>(n));
}

LinearForm LinearForm::zero(AlgebraPtr h, FormKind kind) {
  if (kind == FormKind::character) throw std::invalid_argument("the zero map is not a character");
  const std::size_t n = kind == FormKind::general ? h->forests().size() : h->generators().size();
  const int g = h->max_grade();
  return LinearForm(std::move(h), kind, TargetKind::any, g, std::vector<TargetElement>(n));
}

LinearForm LinearForm::character(AlgebraPtr h, std::vector<TargetElement> generator_values, TargetKind target,
                                 std::optional<int> grade) {
  const int g = grade.value_or(h->max_grade());
  return LinearForm(std::move(h), FormKind::character, target, g, std::move(generator_values));
}

LinearForm LinearForm::infinitesimal(AlgebraPtr h, std::vector<TargetElement> generator_values,
                                     TargetKind target, std::optional<int> grade) {
  const int g = grade.value_or(h->max_grade());
  return LinearForm(std::move(h), FormKind::infinitesimal, target, g, std::move(generator_values));
}

LinearForm LinearForm::general(AlgebraPtr h, std::vector<TargetElement> forest_values, TargetKind target,
                               std::optional<int> grade) {
  const int g = grade.value_or(h->max_grade());
  return LinearForm(std::move(h), FormKind::general, target, g, std::move(forest_values));
}

void LinearForm::require_grade(int n, const char* what) const {
  if (n > grade_)
    throw std::out_of_range(std::string(what) + ": grade " + std::to_string(n) + " exceeds the form's validity grade " +
                            std::to_string(grade_));
}

TargetElement LinearForm::operator()(const Forest& f) const {
  require_grade(algebra_->grade(f), "evaluation");
  switch (kind_) {
    case FormKind::character: {
      TargetElement v = TargetElement::one();
      for (std::size_t id : f) v = v * values_[id];
      return v;
    }
    case FormKind::infinitesimal:
      return f.size() == 1 ? values_[f.front()] : TargetElement();
    case FormKind::general:
      return values_[algebra_->forest_index(f)];
  }
  throw std::logic_error("unhandled form kind");
}

TargetElement LinearForm::at_forest(std::size_t forest_idx) const {
  if (kind_ == FormKind::general) {
    require_grade(algebra_->grade(algebra_->forests().at(forest_idx)), "evaluation");
    return values_[forest_idx];
  }
  return (*this)(algebra_->forests().at(forest_idx));
}

TargetElement LinearForm::on_generator(std::size_t id) const {
  require_grade(algebra_->generator(id).loops, "evaluation");
  if (kind_ == FormKind::general) return values_[algebra_->forest_index(Forest{id})];
  return values_[id];
}

LinearForm LinearForm::restricted(int n) const {
  LinearForm out = *this;
  out.grade_ = std::min(grade_, std::max(n, 0));
  return out;
}

LinearForm LinearForm::as_general() const {
  if (kind_ == FormKind::general) return *this;
  const auto& forests = algebra_->forests();
  std::vector<TargetElement> vals(forests.size());
  for (std::size_t i = 0; i < forests.size(); ++i)
    if (algebra_->grade(forests[i]) <= grade_) vals[i] = (*this)(forests[i]);
  return LinearForm(algebra_, FormKind::general, target_, grade_, std::move(vals));
}

LinearForm LinearForm::graded_part(int n) const {
  require_grade(n, "graded part");
  std::vector<TargetElement> vals(algebra_->forests().size());
  for (std::size_t i : algebra_->forests_of_grade(n)) vals[i] = at_forest(i);
  return LinearForm(algebra_, FormKind::general, target_, grade_, std::move(vals));
}

LinearForm LinearForm::with_generator_value(std::size_t id, TargetElement value) const {
  if (kind_ == FormKind::general) throw std::invalid_argument("with_generator_value on a general form");
  LinearForm out = *this;
  out.values_.at(id) = std::move(value);
  return out;
}

std::optional<Forest> first_difference(const LinearForm& a, const LinearForm& b, int n) {
  if (&a.algebra() != &b.algebra()) throw std::invalid_argument("forms over different Hopf algebras");
  a.require_grade(n, "comparison");
  b.require_grade(n, "comparison");
  const HopfAlgebra& h = a.algebra();
  const bool by_generators = a.kind() == b.kind() && a.kind() != FormKind::general;
  if (by_generators) {
    for (std::size_t id = 0; id < h.generators().size(); ++id)
      if (h.generator(id).loops <= n && !(a.on_generator(id) == b.on_generator(id))) return Forest{id};
    return std::nullopt;
  }
  for (int g = 0; g <= n; ++g)
    for (std::size_t i : h.forests_of_grade(g))
      if (!(a.at_forest(i) == b.at_forest(i))) return h.forests()[i];
  return std::nullopt;
}

bool equal_up_to(const LinearForm& a, const LinearForm& b, int n) { return !first_difference(a, b, n); }

namespace {

LinearForm combine_forms(const LinearForm& a, const LinearForm& b, const Rational& sb) {
  if (&a.algebra() != &b.algebra()) throw std::invalid_argument("forms over different Hopf algebras");
  const TargetKind target = combine(a.target(), b.target());
  const int grade = std::min(a.grade(), b.grade());
  const HopfAlgebra& h = a.algebra();
  if (a.kind() == FormKind::infinitesimal && b.kind() == FormKind::infinitesimal) {
    std::vector<TargetElement> vals(h.generators().size());
    for (std::size_t id = 0; id < vals.size(); ++id)
      if (h.generator(id).loops <= grade) vals[id] = a.on_generator(id) + b.on_generator(id) * sb;
    return LinearForm::infinitesimal(a.algebra_ptr(), std::move(vals), target, grade);
  }
  std::vector<TargetElement> vals(h.forests().size());
  for (int g = 0; g <= grade; ++g)
    for (std::size_t i : h.forests_of_grade(g)) vals[i] = a.at_forest(i) + b.at_forest(i) * sb;
  return LinearForm::general(a.algebra_ptr(), std::move(vals), target, grade);
}

// Indices of the generators (or forests) of grade <= n, in order.
std::vector<std::size_t> generator_ids(const HopfAlgebra& h, int n) {
  std::vector<std::size_t> out;
  for (std::size_t id = 0; id < h.generators().size(); ++id)
    if (h.generator(id).loops <= n) out.push_back(id);
  return out;
}

std::vector<std::size_t> forest_ids(const HopfAlgebra& h, int n) {
  std::vector<std::size_t> out;
  for (int g = 0; g <= n; ++g)
    for (std::size_t i : h.forests_of_grade(g)) out.push_back(i);
  return out;
}

TargetElement sweedler_sum(const TensorSum& delta, const LinearForm& f, const LinearForm& g) {
  TargetElement acc;
  for (const auto& t : delta.terms) {
    TargetElement term = f(t.left) * g(t.right);
    if (t.multiplicity != 1) term *= Rational(static_cast<unsigned long>(t.multiplicity));
    acc += term;
  }
  return acc;
}

template <typename Body>
void for_each_index(const std::vector<std::size_t>& ids, Execution ex, Body&& body) {
  const long n = static_cast<long>(ids.size());
  if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k) body(ids[static_cast<std::size_t>(k)]);
  } else {
    for (long k = 0; k < n; ++k) body(ids[static_cast<std::size_t>(k)]);
  }
}

}  // namespace

LinearForm add(const LinearForm& a, const LinearForm& b) { return combine_forms(a, b, Rational(1)); }

LinearForm subtract(const LinearForm& a, const LinearForm& b) { return combine_forms(a, b, Rational(-1)); }

LinearForm scale(const LinearForm& a, const Rational& s) {
  const HopfAlgebra& h = a.algebra();
  if (a.kind() == FormKind::infinitesimal) {
    std::vector<TargetElement> vals(h.generators().size());
    for (std::size_t id : generator_ids(h, a.grade())) vals[id] = a.on_generator(id) * s;
    return LinearForm::infinitesimal(a.algebra_ptr(), std::move(vals), a.target(), a.grade());
  }
  std::vector<TargetElement> vals(h.forests().size());
  for (std::size_t i : forest_ids(h, a.grade())) vals[i] = a.at_forest(i) * s;
  return LinearForm::general(a.algebra_ptr(), std::move(vals), a.target(), a.grade());
}

LinearForm convolve(const LinearForm& f, const LinearForm& g, Execution ex) {
  if (&f.algebra() != &g.algebra()) throw std::invalid_argument("forms over different Hopf algebras");
  const TargetKind target = combine(f.target(), g.target());
  const int grade = std::min(f.grade(), g.grade());
  const HopfAlgebra& h = f.algebra();
  if (f.kind() == FormKind::character && g.kind() == FormKind::character) {
    std::vector<TargetElement> vals(h.generators().size());
    for_each_index(generator_ids(h, grade), ex,
                   [&](std::size_t id) { vals[id] = sweedler_sum(h.coproduct(id), f, g); });
    return LinearForm::character(f.algebra_ptr(), std::move(vals), target, grade);
  }
  std::vector<TargetElement> vals(h.forests().size());
  for_each_index(forest_ids(h, grade), ex,
                 [&](std::size_t i) { vals[i] = sweedler_sum(h.coproduct_at(i), f, g); });
  return LinearForm::general(f.algebra_ptr(), std::move(vals), target, grade);
}

namespace {

void require_unital(const LinearForm& phi, const char* what) {
  if (phi.kind() == FormKind::character) return;
  if (!(phi(Forest{}) == TargetElement::one()))
    throw std::invalid_argument(std::string(what) + ": phi(1) != 1");
  if (phi.kind() != FormKind::general || !is_multiplicative(phi))
    throw std::invalid_argument(std::string(what) + ": argument is not a character");
}

}  // namespace

LinearForm char_inverse(const LinearForm& phi) {
  require_unital(phi, "char_inverse");
  const HopfAlgebra& h = phi.algebra();
  std::vector<TargetElement> inv(h.generators().size());
  auto inv_of = [&](const Forest& f) {
    TargetElement v = TargetElement::one();
    for (std::size_t id : f) v = v * inv[id];
    return v;
  };
  for (std::size_t id : generator_ids(h, phi.grade())) {
    TargetElement v = -phi.on_generator(id);
    for (const auto& t : h.reduced_coproduct(id)) {
      TargetElement term = inv_of(t.left) * phi(t.right);
      if (t.multiplicity != 1) term *= Rational(static_cast<unsigned long>(t.multiplicity));
      v -= term;
    }
    inv[id] = std::move(v);
  }
  return LinearForm::character(phi.algebra_ptr(), std::move(inv), phi.target(), phi.grade());
}

bool is_infinitesimal(const LinearForm& mu, std::optional<Forest>* witness) {
  if (mu.kind() == FormKind::infinitesimal) return true;
  const HopfAlgebra& h = mu.algebra();
  for (std::size_t i : forest_ids(h, mu.grade())) {
    const Forest& f = h.forests()[i];
    if (f.size() != 1 && !mu.at_forest(i).is_zero()) {
      if (witness) *witness = f;
      return false;
    }
  }
  return true;
}

bool is_multiplicative(const LinearForm& phi, std::optional<Forest>* witness) {
  if (phi.kind() == FormKind::character) return true;
  const HopfAlgebra& h = phi.algebra();
  for (std::size_t i : forest_ids(h, phi.grade())) {
    const Forest& f = h.forests()[i];
    if (f.size() == 1) continue;
    TargetElement product = TargetElement::one();
    for (std::size_t id : f) product = product * phi.on_generator(id);
    if (!(phi.at_forest(i) == product)) {
      if (witness) *witness = f;
      return false;
    }
  }
  return true;
}

LinearForm exp_star_series(const LinearForm& mu, Execution ex) {
  std::optional<Forest> bad;
  if (!is_infinitesimal(mu, &bad))
    throw std::invalid_argument("exp_star: argument is not infinitesimal (nonzero on " +
                                mu.algebra().forest_name(bad.value_or(Forest{})) + ")");
  const LinearForm e = LinearForm::counit(mu.algebra_ptr()).restricted(mu.grade());
  LinearForm power = mu.as_general();
  LinearForm sum = add(e, power);
  Rational factorial(1);
  for (int k = 2; k <= mu.grade(); ++k) {
    power = convolve(power, mu, ex);
    factorial *= k;
    sum = add(sum, scale(power, Rational(1) / factorial));
  }
  return sum;
}

LinearForm exp_star(const LinearForm& mu, Execution ex) {
  const LinearForm series = exp_star_series(mu, ex);
  const HopfAlgebra& h = mu.algebra();
  std::vector<TargetElement> vals(h.generators().size());
  for (std::size_t id : generator_ids(h, mu.grade())) vals[id] = series.on_generator(id);
  return LinearForm::character(mu.algebra_ptr(), std::move(vals), mu.target(), mu.grade());
}

LinearForm log_star_series(const LinearForm& phi, Execution ex) {
  if (!(phi(Forest{}) == TargetElement::one())) throw std::invalid_argument("log_star: phi(1) != 1");
  const LinearForm e = LinearForm::counit(phi.algebra_ptr()).restricted(phi.grade());
  const LinearForm d = subtract(phi, e);
  LinearForm power = d;
  LinearForm sum = d;
  for (int k = 2; k <= phi.grade(); ++k) {
    power = convolve(power, d, ex);
    const Rational c = Rational(k % 2 == 0 ? -1 : 1) / Rational(k);
    sum = add(sum, scale(power, c));
  }
  return sum;
}

LinearForm log_star(const LinearForm& phi, Execution ex) {
  require_unital(phi, "log_star");
  const LinearForm series = log_star_series(phi, ex);
  std::optional<Forest> bad;
  if (!is_infinitesimal(series, &bad))
    throw std::logic_error("log_star: logarithm of a character is nonzero on " +
                           phi.algebra().forest_name(bad.value_or(Forest{})));
  const HopfAlgebra& h = phi.algebra();
  std::vector<TargetElement> vals(h.generators().size());
  for (std::size_t id : generator_ids(h, phi.grade())) vals[id] = series.on_generator(id);
  return LinearForm::infinitesimal(phi.algebra_ptr(), std::move(vals), phi.target(), phi.grade());
}

}  // namespace renorm
