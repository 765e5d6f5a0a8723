#pragma once

#include <optional>
#include <string>

#include "renorm/degree.hpp"
#include "renorm/polynomial.hpp"

namespace renorm {

/// Model A: Laurent series, P- = pole part. Model B: momentum polynomials,
/// P-^G = Taylor jet of order a(G) in all momentum symbols.
enum class Model { A, B };

/// Which values a linear form may carry. `any` is for forms whose values
/// are plain rationals (the counit, zero).
enum class TargetKind { any, laurent, momentum };

std::string to_string(Model m);
std::string to_string(TargetKind k);

/// Throws std::invalid_argument when the kinds are incompatible; returns the
/// more specific of the two otherwise.
TargetKind combine(TargetKind a, TargetKind b);

/// Family of projectors P-^G with P+^G = id - P-^G. The dual scheme swaps
/// the two.
class SubtractionScheme {
 public:
  static SubtractionScheme pole();
  static SubtractionScheme taylor(DegreeFunction degree);

  SubtractionScheme dual() const;

  Model model() const { return model_; }
  bool is_dual() const { return dual_; }
  /// Model B only; throws std::logic_error for Model A.
  const DegreeFunction& degree_function() const;
  /// "pole", "minimal", "critical" or "custom", prefixed with "dual-" when swapped.
  std::string name() const;

  /// a(G) under Model B; 0 under Model A, where the projector ignores it.
  int degree(const FeynmanGraph& g) const;

  /// P-^G with a(G) already resolved.
  TargetElement minus(int degree, const TargetElement& x) const;
  TargetElement plus(int degree, const TargetElement& x) const;

  TargetElement minus(const FeynmanGraph& g, const TargetElement& x) const { return minus(degree(g), x); }
  TargetElement plus(const FeynmanGraph& g, const TargetElement& x) const { return plus(degree(g), x); }

  /// Model A accepts Laurent-valued forms, Model B momentum-valued ones.
  bool accepts(TargetKind kind) const;
  /// Throws std::invalid_argument unless accepts(kind).
  void require(TargetKind kind) const;

 private:
  SubtractionScheme(Model model, std::optional<DegreeFunction> degree, bool dual)
      : model_(model), degree_(std::move(degree)), dual_(dual) {}

  TargetElement raw_minus(int degree, const TargetElement& x) const;

  Model model_;
  std::optional<DegreeFunction> degree_;
  bool dual_ = false;
};

/// P(x)P(y) == P(x P(y)) + P(P(x) y) - P(x y) with P the pole projector.
bool rota_baxter_check(const LaurentSeries& x, const LaurentSeries& y);

}  // namespace renorm
