#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "renorm/graph.hpp"
#include "renorm/polynomial.hpp"

namespace renorm {

/// Seeded generator threaded explicitly through every random construction.
/// Bounded draws are done by hand so sequences match across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi);
  bool chance(std::uint64_t numerator, std::uint64_t denominator) { return below(denominator) < numerator; }
  /// Nonzero rational with numerator in [-9, 9] and denominator in [1, 6].
  Rational rational();

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finaliser over the inputs; used for per-task seeds.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);

inline constexpr int kDefaultTruncation = 4;

/// Random series with poles down to eps^-max_pole, trusted up to `truncation`.
/// With max_pole < 0 the series is regular (nonnegative exponents only).
LaurentSeries random_laurent(Rng& rng, int max_pole, int truncation = kDefaultTruncation);

/// Random momentum monomial of the given total degree over `symbols`.
Monomial random_monomial(Rng& rng, const std::vector<std::string>& symbols, int degree);

/// sum_{d = min_degree}^{max_degree} c_d(eps) m_d with random monomials m_d over
/// `symbols` and random Laurent coefficients; every degree is populated.
MomentumPolynomial random_polynomial(Rng& rng, const std::vector<std::string>& symbols, int min_degree,
                                     int max_degree, int max_pole, int truncation = kDefaultTruncation);

/// Symbol prefix for a graph name: "p_" followed by the alphanumeric runs of
/// the name joined by single underscores.
std::string symbol_prefix(const std::string& graph_name);

/// Independent external momenta p_<name>_1 .. p_<name>_max(1, N-1).
std::vector<std::string> momentum_symbols(const FeynmanGraph& g);

}  // namespace renorm
