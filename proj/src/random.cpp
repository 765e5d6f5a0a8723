#include "renorm/random.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace renorm {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % n;
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("Rng::range with hi < lo");
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

Rational make_rational(std::int64_t num, std::int64_t den) {
  Rational q(static_cast<long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

}  // namespace

Rational Rng::rational() {
  std::int64_t num = range(1, 9);
  if (chance(1, 2)) num = -num;
  return make_rational(num, range(1, 6));
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t h = mix(base);
  h = mix(h ^ a);
  h = mix(h ^ b);
  return mix(h ^ c);
}

LaurentSeries random_laurent(Rng& rng, int max_pole, int truncation) {
  LaurentSeries s = LaurentSeries::zero(truncation);
  const int lowest = max_pole < 0 ? 0 : -static_cast<int>(rng.range(0, max_pole));
  for (int n = lowest; n <= truncation; ++n)
    if (n == lowest || rng.chance(2, 3)) s += LaurentSeries::term(n, rng.rational(), truncation);
  return s;
}

Monomial random_monomial(Rng& rng, const std::vector<std::string>& symbols, int degree) {
  if (symbols.empty()) {
    if (degree != 0) throw std::invalid_argument("random_monomial: no symbols for positive degree");
    return Monomial();
  }
  std::vector<std::pair<std::string, int>> powers;
  for (int i = 0; i < degree; ++i) powers.emplace_back(symbols[rng.below(symbols.size())], 1);
  return Monomial(std::move(powers));
}

MomentumPolynomial random_polynomial(Rng& rng, const std::vector<std::string>& symbols, int min_degree,
                                     int max_degree, int max_pole, int truncation) {
  MomentumPolynomial p;
  for (int d = std::max(0, min_degree); d <= max_degree; ++d)
    p.add_term(random_monomial(rng, symbols, d), random_laurent(rng, max_pole, truncation));
  return p;
}

std::string symbol_prefix(const std::string& graph_name) {
  std::string out = "p_";
  bool gap = false;
  for (char ch : graph_name) {
    if (std::isalnum(static_cast<unsigned char>(ch))) {
      if (gap && out.back() != '_') out += '_';
      out += ch;
      gap = false;
    } else {
      gap = true;
    }
  }
  return out;
}

std::vector<std::string> momentum_symbols(const FeynmanGraph& g) {
  const std::size_t count = std::max<std::size_t>(1, g.leg_count() > 0 ? g.leg_count() - 1 : 0);
  const std::string prefix = symbol_prefix(g.name());
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + "_" + std::to_string(i));
  return out;
}

}  // namespace renorm
