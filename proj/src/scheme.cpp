#include "renorm/scheme.hpp"

#include <stdexcept>

namespace renorm {

std::string to_string(Model m) { return m == Model::A ? "A" : "B"; }

std::string to_string(TargetKind k) {
  switch (k) {
    case TargetKind::any: return "any";
    case TargetKind::laurent: return "laurent";
    case TargetKind::momentum: return "momentum";
  }
  return "unknown";
}

TargetKind combine(TargetKind a, TargetKind b) {
  if (a == TargetKind::any) return b;
  if (b == TargetKind::any || a == b) return a;
  throw std::invalid_argument("mismatched target algebras: " + to_string(a) + " vs " + to_string(b));
}

SubtractionScheme SubtractionScheme::pole() { return SubtractionScheme(Model::A, std::nullopt, false); }

SubtractionScheme SubtractionScheme::taylor(DegreeFunction degree) {
  return SubtractionScheme(Model::B, std::move(degree), false);
}

SubtractionScheme SubtractionScheme::dual() const { return SubtractionScheme(model_, degree_, !dual_); }

const DegreeFunction& SubtractionScheme::degree_function() const {
  if (!degree_) throw std::logic_error("pole scheme has no degree function");
  return *degree_;
}

std::string SubtractionScheme::name() const {
  const std::string base = degree_ ? degree_->name() : "pole";
  return dual_ ? "dual-" + base : base;
}

int SubtractionScheme::degree(const FeynmanGraph& g) const { return degree_ ? (*degree_)(g) : 0; }

TargetElement SubtractionScheme::raw_minus(int degree, const TargetElement& x) const {
  if (model_ == Model::A) return pole_part(x);
  return taylor_jet(x, degree);
}

TargetElement SubtractionScheme::minus(int degree, const TargetElement& x) const {
  return dual_ ? x - raw_minus(degree, x) : raw_minus(degree, x);
}

TargetElement SubtractionScheme::plus(int degree, const TargetElement& x) const {
  return dual_ ? raw_minus(degree, x) : x - raw_minus(degree, x);
}

bool SubtractionScheme::accepts(TargetKind kind) const {
  if (kind == TargetKind::any) return true;
  return model_ == Model::A ? kind == TargetKind::laurent : kind == TargetKind::momentum;
}

void SubtractionScheme::require(TargetKind kind) const {
  if (!accepts(kind))
    throw std::invalid_argument("scheme '" + name() + "' (model " + to_string(model_) +
                                ") cannot act on " + to_string(kind) + "-valued forms");
}

bool rota_baxter_check(const LaurentSeries& x, const LaurentSeries& y) {
  const LaurentSeries px = x.pole_part();
  const LaurentSeries py = y.pole_part();
  return px * py == (x * py).pole_part() + (px * y).pole_part() - (x * y).pole_part();
}

}  // namespace renorm
