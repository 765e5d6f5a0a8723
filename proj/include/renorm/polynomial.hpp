#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "renorm/laurent.hpp"

namespace renorm {

/// Product of scalar momentum symbols with positive exponents, sorted by name.
class Monomial {
 public:
  Monomial() = default;
  /// Zero exponents are dropped; repeated names accumulate.
  explicit Monomial(std::vector<std::pair<std::string, int>> powers);
  static Monomial variable(std::string name, int exponent = 1);

  const std::vector<std::pair<std::string, int>>& powers() const { return powers_; }
  int degree() const;
  bool is_one() const { return powers_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::vector<std::pair<std::string, int>> powers_;
};

/// Polynomial in momentum symbols with Laurent-series coefficients. Entries
/// whose coefficient is an exact zero are pruned; a truncated zero is kept
/// since it still records an error term.
class MomentumPolynomial {
 public:
  MomentumPolynomial() = default;
  explicit MomentumPolynomial(LaurentSeries constant);

  static MomentumPolynomial one() { return MomentumPolynomial(LaurentSeries(Rational(1))); }
  static MomentumPolynomial term(Monomial m, LaurentSeries c);

  const std::map<Monomial, LaurentSeries>& terms() const { return terms_; }

  /// No entry with a nonzero coefficient.
  bool is_zero() const;
  /// Highest total momentum degree among nonzero terms; -1 for zero.
  int degree() const;
  /// Lowest total momentum degree among nonzero terms; -1 for zero.
  int low_degree() const;
  std::set<std::string> variables() const;

  /// Applies `f` to every coefficient, keeping the monomials.
  template <typename F>
  MomentumPolynomial map_coefficients(F&& f) const {
    MomentumPolynomial out;
    for (const auto& [m, c] : terms_) out.add_term(m, f(c));
    return out;
  }

  void add_term(const Monomial& m, const LaurentSeries& c);

  MomentumPolynomial operator-() const;
  MomentumPolynomial& operator+=(const MomentumPolynomial& other);
  MomentumPolynomial& operator-=(const MomentumPolynomial& other);
  MomentumPolynomial& operator*=(const Rational& scalar);

  friend MomentumPolynomial operator+(MomentumPolynomial a, const MomentumPolynomial& b) { return a += b; }
  friend MomentumPolynomial operator-(MomentumPolynomial a, const MomentumPolynomial& b) { return a -= b; }
  friend MomentumPolynomial operator*(MomentumPolynomial a, const Rational& s) { return a *= s; }
  friend MomentumPolynomial operator*(const MomentumPolynomial& a, const MomentumPolynomial& b);

  /// Term-wise coefficient equality; a missing monomial is an exact zero.
  friend bool operator==(const MomentumPolynomial& a, const MomentumPolynomial& b);

  std::string to_string() const;

 private:
  std::map<Monomial, LaurentSeries> terms_;
};

/// Every value of a Feynman-rule character lives in this ambient algebra.
using TargetElement = MomentumPolynomial;

/// Taylor jet M^(k): keeps the terms of total momentum degree <= k.
/// k = -1 is the zero map.
MomentumPolynomial taylor_jet(const MomentumPolynomial& x, int k);

/// Jet of order k in the listed symbols only; other symbols count as constants.
MomentumPolynomial taylor_jet_in(const MomentumPolynomial& x, int k, const std::set<std::string>& symbols);

/// Coefficient-wise pole part (minimal subtraction).
MomentumPolynomial pole_part(const MomentumPolynomial& x);
MomentumPolynomial regular_part(const MomentumPolynomial& x);

/// M^(ki)(f) M^(kj)(g) == M^(ki+kj)(M^(ki)(f) g + f M^(kj)(g) - f g) for f, g in
/// disjoint symbol sets. Throws std::invalid_argument if the sets overlap.
bool rb_family_check(int ki, int kj, const MomentumPolynomial& f, const MomentumPolynomial& g);

}  // namespace renorm
