#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "renorm/hopf.hpp"
#include "renorm/polynomial.hpp"
#include "renorm/scheme.hpp"

namespace renorm {

enum class FormKind { general, character, infinitesimal };

/// Serial reference loops or OpenMP-parallel loops; results are identical.
enum class Execution { serial, parallel };

std::string to_string(FormKind k);

/// Linear map from the Hopf algebra (truncated at `grade()`) to the target
/// algebra. Characters and infinitesimal characters store generator values
/// only; general forms store one value per forest.
class LinearForm {
 public:
  using AlgebraPtr = std::shared_ptr<const HopfAlgebra>;

  /// The counit e: 1 on the unit, 0 elsewhere.
  static LinearForm counit(AlgebraPtr h);
  static LinearForm zero(AlgebraPtr h, FormKind kind = FormKind::infinitesimal);
  /// One value per generator; generators above `grade` are ignored.
  static LinearForm character(AlgebraPtr h, std::vector<TargetElement> generator_values, TargetKind target,
                              std::optional<int> grade = std::nullopt);
  static LinearForm infinitesimal(AlgebraPtr h, std::vector<TargetElement> generator_values, TargetKind target,
                                  std::optional<int> grade = std::nullopt);
  /// One value per forest, indexed like HopfAlgebra::forests().
  static LinearForm general(AlgebraPtr h, std::vector<TargetElement> forest_values, TargetKind target,
                            std::optional<int> grade = std::nullopt);

  FormKind kind() const { return kind_; }
  TargetKind target() const { return target_; }
  /// Highest grade on which the form may be evaluated.
  int grade() const { return grade_; }
  const HopfAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }

  /// Throws std::out_of_range beyond grade().
  TargetElement operator()(const Forest& f) const;
  TargetElement at_forest(std::size_t forest_idx) const;
  /// Value on a single generator.
  TargetElement on_generator(std::size_t id) const;

  /// Same values, valid only up to `n`.
  LinearForm restricted(int n) const;
  /// Same values stored per forest.
  LinearForm as_general() const;
  /// Values on the forests of grade exactly n; zero elsewhere (general form).
  LinearForm graded_part(int n) const;

  /// Copy with one stored generator value replaced (characters and
  /// infinitesimal characters only).
  LinearForm with_generator_value(std::size_t id, TargetElement value) const;

  /// Throws std::out_of_range when `n` exceeds grade().
  void require_grade(int n, const char* what) const;

 private:
  LinearForm(AlgebraPtr h, FormKind kind, TargetKind target, int grade, std::vector<TargetElement> values);

  AlgebraPtr algebra_;
  FormKind kind_ = FormKind::general;
  TargetKind target_ = TargetKind::any;
  int grade_ = 0;
  // generator values (character, infinitesimal) or forest values (general)
  std::vector<TargetElement> values_;
};

/// Equality on every forest of grade <= n.
bool equal_up_to(const LinearForm& a, const LinearForm& b, int n);
/// First forest of grade <= n where the forms differ.
std::optional<Forest> first_difference(const LinearForm& a, const LinearForm& b, int n);

LinearForm add(const LinearForm& a, const LinearForm& b);
LinearForm subtract(const LinearForm& a, const LinearForm& b);
LinearForm scale(const LinearForm& a, const Rational& s);

/// (f * g)(h) = sum f(h1) g(h2) over the coproduct. Two characters give a
/// character computed on generators only; anything else is a general form.
LinearForm convolve(const LinearForm& f, const LinearForm& g, Execution ex = Execution::serial);

/// Inverse in the character group by the graded recursion
/// phi^-1(G) = -phi(G) - sum_S phi^-1(prod gamma) phi(G/S).
LinearForm char_inverse(const LinearForm& phi);

/// sum_k mu^{*k}/k! as a general form.
LinearForm exp_star_series(const LinearForm& mu, Execution ex = Execution::serial);
/// exp_star_series restricted to generators. Throws std::invalid_argument
/// unless mu is infinitesimal.
LinearForm exp_star(const LinearForm& mu, Execution ex = Execution::serial);

/// sum_k (-1)^{k+1} (phi - e)^{*k}/k as a general form.
LinearForm log_star_series(const LinearForm& phi, Execution ex = Execution::serial);
/// log_star_series as an infinitesimal character. Throws std::invalid_argument
/// when phi(1) != 1 or phi is not a character.
LinearForm log_star(const LinearForm& phi, Execution ex = Execution::serial);

/// Checks the definition: mu(1) = 0 and mu vanishes on every product forest.
bool is_infinitesimal(const LinearForm& mu, std::optional<Forest>* witness = nullptr);
/// phi(1) = 1 and phi(F1 F2) = phi(F1) phi(F2) on every forest within grade.
bool is_multiplicative(const LinearForm& phi, std::optional<Forest>* witness = nullptr);

}  // namespace renorm
