#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "renorm/linear_form.hpp"
#include "renorm/projection.hpp"

namespace renorm {

/// Output of Bogoliubov's recursion on the generators up to max_grade.
struct RenormResult {
  LinearForm counterterm;              // C, a character
  std::vector<TargetElement> prepared; // Rbar per generator id (zero above max_grade)
  LinearForm renormalised;             // R, a character
  std::string scheme;
  int max_grade = 0;
};

/// Rbar(G) = phi(G) + sum_S prod C(gamma) phi(G/S), C = -P-(Rbar), R = P+(Rbar).
/// Throws std::invalid_argument when the degree function violates the
/// subtraction-degree inequality on some generator, and std::out_of_range
/// when max_grade exceeds the grade of phi or of the algebra.
RenormResult bogoliubov(const LinearForm& phi, const BoundScheme& scheme, int max_grade);

/// C(g) by unrolling the recursion directly on graphs: no memo, no Hopf
/// algebra tables, woods and quotients recomputed at every level.
TargetElement forest_expansion_oracle(const LinearForm& phi, const SubtractionScheme& scheme, const FeynmanGraph& g);

enum class Method { bogoliubov, exp_left, exp_right };

std::string to_string(Method m);
/// "bogoliubov", "exp-left", "exp-right".
std::optional<Method> parse_method(const std::string& text);

/// Irregular/regular factorisation of phi. For bogoliubov and exp-left,
/// minus * phi = plus. For exp-right, minus = phi * plus, i.e.
/// phi = minus * plus^-1.
struct BwhPair {
  LinearForm minus;
  LinearForm plus;
  Method method = Method::bogoliubov;
};

BwhPair bwh_pair(const RenormResult& r);

/// Rewrites an exp-right pair in the minus * phi = plus orientation:
/// (minus^-1, plus^-1). Other pairs are returned unchanged.
BwhPair normalised(const BwhPair& pair);

/// One of the statements the exponential recursions are expected to satisfy.
struct GuaranteeCheck {
  std::string statement;
  int step = 0;
  bool holds = true;
  std::optional<Forest> witness;
};

struct ExponentialTrace {
  std::vector<LinearForm> mu;         // mu_1 .. mu_n
  std::vector<LinearForm> upsilon;    // Upsilon_1 .. Upsilon_n
  std::vector<LinearForm> phi_minus;  // phi-_0 .. phi-_n
  std::vector<GuaranteeCheck> checks;
  bool asserted = false;
};

struct ExponentialResult {
  BwhPair pair;
  ExponentialTrace trace;
};

/// mu_n fails to vanish on a product forest.
class RecursionError : public std::runtime_error {
 public:
  RecursionError(const std::string& what, Forest forest) : std::runtime_error(what), forest_(std::move(forest)) {}
  const Forest& forest() const { return forest_; }

 private:
  Forest forest_;
};

/// phi-_0 = phi^-1, mu_{n+1} = P+(phi-_n) on grade n+1, Upsilon_{n+1} = exp*(-mu_{n+1}),
/// phi-_{n+1} = Upsilon_{n+1} * phi-_n, plus = Upsilon_n * ... * Upsilon_1.
/// With `assert_guarantees` a failed check throws std::logic_error; otherwise
/// it is only recorded in the trace.
ExponentialResult exponential_left(const LinearForm& phi, const BoundScheme& scheme, int max_grade,
                                   bool assert_guarantees, Execution ex = Execution::serial);

/// phi-_0 = phi, phi-_{n+1} = phi-_n * Upsilon_{n+1}, plus = Upsilon_1 * ... * Upsilon_n.
ExponentialResult exponential_right(const LinearForm& phi, const BoundScheme& scheme, int max_grade,
                                    bool assert_guarantees, Execution ex = Execution::serial);

enum class Regularity { regular, irregular };

struct RegularityResult {
  bool holds = true;
  std::optional<Forest> witness;
};

/// P+(phi) (resp. P-(phi)) agrees with phi on every forest of grade <= n.
RegularityResult regularity_check(const LinearForm& phi, const BoundScheme& scheme, int n, Regularity mode);

/// The factorisation identity of the pair's orientation holds on every forest
/// up to grade n, plus is n-regular and minus is n-irregular.
bool bwh_verify(const LinearForm& phi, const BwhPair& pair, const BoundScheme& scheme, int n);

}  // namespace renorm
