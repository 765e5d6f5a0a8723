#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>

#include "renorm/rational.hpp"

namespace renorm {

/// Truncated Laurent series in the regulator eps with exact rational
/// coefficients. Coefficients are trusted for exponents <= truncation();
/// nothing above it is stored. An exact series has truncation() == kExact.
class LaurentSeries {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max();

  LaurentSeries() = default;
  explicit LaurentSeries(Rational constant, int truncation = kExact);

  static LaurentSeries term(int exponent, Rational coefficient, int truncation = kExact);
  /// Zero with known error O(eps^(truncation+1)).
  static LaurentSeries zero(int truncation = kExact);

  const std::map<int, Rational>& coefficients() const { return coeffs_; }
  int truncation() const { return trunc_; }
  bool is_exact() const { return trunc_ == kExact; }

  Rational coefficient(int exponent) const;
  /// Lowest stored exponent; nullopt when no coefficient is stored.
  std::optional<int> valuation() const;
  /// No stored coefficient (the series may still carry a finite truncation).
  bool is_zero() const { return coeffs_.empty(); }
  bool is_exact_zero() const { return coeffs_.empty() && is_exact(); }

  LaurentSeries with_truncation(int truncation) const;

  /// Strictly negative exponents (the minimal-subtraction pole part).
  LaurentSeries pole_part() const;
  /// Exponents >= 0; pole_part() + regular_part() == *this.
  LaurentSeries regular_part() const;

  LaurentSeries operator-() const;
  LaurentSeries& operator+=(const LaurentSeries& other);
  LaurentSeries& operator-=(const LaurentSeries& other);
  LaurentSeries& operator*=(const Rational& scalar);

  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(LaurentSeries a, const Rational& s) { return a *= s; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

  /// Equality on the common trusted range.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

  std::string to_string() const;

 private:
  void drop_untrusted();

  std::map<int, Rational> coeffs_;
  int trunc_ = kExact;
};

}  // namespace renorm
