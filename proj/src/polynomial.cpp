#include "renorm/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace renorm {

Monomial::Monomial(std::vector<std::pair<std::string, int>> powers) {
  std::sort(powers.begin(), powers.end());
  for (auto& [name, e] : powers) {
    if (e < 0) throw std::invalid_argument("negative momentum exponent for " + name);
    if (e == 0) continue;
    if (!powers_.empty() && powers_.back().first == name) powers_.back().second += e;
    else powers_.emplace_back(std::move(name), e);
  }
}

Monomial Monomial::variable(std::string name, int exponent) {
  return Monomial({{std::move(name), exponent}});
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [name, e] : powers_) d += e;
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto ia = a.powers_.begin();
  auto ib = b.powers_.begin();
  while (ia != a.powers_.end() || ib != b.powers_.end()) {
    if (ib == b.powers_.end() || (ia != a.powers_.end() && ia->first < ib->first)) {
      out.powers_.push_back(*ia++);
    } else if (ia == a.powers_.end() || ib->first < ia->first) {
      out.powers_.push_back(*ib++);
    } else {
      out.powers_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

std::string Monomial::to_string() const {
  if (powers_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < powers_.size(); ++i) {
    if (i) out += "*";
    out += powers_[i].first;
    if (powers_[i].second != 1) out += "^" + std::to_string(powers_[i].second);
  }
  return out;
}

MomentumPolynomial::MomentumPolynomial(LaurentSeries constant) { add_term(Monomial(), constant); }

MomentumPolynomial MomentumPolynomial::term(Monomial m, LaurentSeries c) {
  MomentumPolynomial p;
  p.add_term(m, c);
  return p;
}

void MomentumPolynomial::add_term(const Monomial& m, const LaurentSeries& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!c.is_exact_zero()) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_exact_zero()) terms_.erase(it);
}

bool MomentumPolynomial::is_zero() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

int MomentumPolynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_)
    if (!c.is_zero()) d = std::max(d, m.degree());
  return d;
}

int MomentumPolynomial::low_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_)
    if (!c.is_zero() && (d < 0 || m.degree() < d)) d = m.degree();
  return d;
}

std::set<std::string> MomentumPolynomial::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [name, e] : m.powers()) out.insert(name);
  return out;
}

MomentumPolynomial MomentumPolynomial::operator-() const {
  MomentumPolynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

MomentumPolynomial& MomentumPolynomial::operator+=(const MomentumPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MomentumPolynomial& MomentumPolynomial::operator-=(const MomentumPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MomentumPolynomial& MomentumPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

MomentumPolynomial operator*(const MomentumPolynomial& a, const MomentumPolynomial& b) {
  MomentumPolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

bool operator==(const MomentumPolynomial& a, const MomentumPolynomial& b) {
  const LaurentSeries exact_zero;
  for (const auto& [m, c] : a.terms_) {
    auto it = b.terms_.find(m);
    if (!(c == (it == b.terms_.end() ? exact_zero : it->second))) return false;
  }
  for (const auto& [m, c] : b.terms_)
    if (!a.terms_.contains(m) && !(c == exact_zero)) return false;
  return true;
}

std::string MomentumPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '[' << c.to_string() << ']';
    if (!m.is_one()) os << '*' << m.to_string();
  }
  return os.str();
}

MomentumPolynomial taylor_jet(const MomentumPolynomial& x, int k) {
  MomentumPolynomial out;
  if (k < 0) return out;
  for (const auto& [m, c] : x.terms())
    if (m.degree() <= k) out.add_term(m, c);
  return out;
}

MomentumPolynomial taylor_jet_in(const MomentumPolynomial& x, int k, const std::set<std::string>& symbols) {
  MomentumPolynomial out;
  if (k < 0) return out;
  for (const auto& [m, c] : x.terms()) {
    int d = 0;
    for (const auto& [name, e] : m.powers())
      if (symbols.contains(name)) d += e;
    if (d <= k) out.add_term(m, c);
  }
  return out;
}

MomentumPolynomial pole_part(const MomentumPolynomial& x) {
  return x.map_coefficients([](const LaurentSeries& c) { return c.pole_part(); });
}

MomentumPolynomial regular_part(const MomentumPolynomial& x) {
  return x.map_coefficients([](const LaurentSeries& c) { return c.regular_part(); });
}

bool rb_family_check(int ki, int kj, const MomentumPolynomial& f, const MomentumPolynomial& g) {
  const auto vf = f.variables();
  const auto vg = g.variables();
  for (const auto& name : vf)
    if (vg.contains(name))
      throw std::invalid_argument("Rota-Baxter family identity needs disjoint symbol sets; '" + name +
                                  "' appears in both factors");
  const MomentumPolynomial jf = taylor_jet(f, ki);
  const MomentumPolynomial jg = taylor_jet(g, kj);
  const MomentumPolynomial lhs = jf * jg;
  const MomentumPolynomial rhs = taylor_jet(jf * g + f * jg - f * g, ki + kj);
  return lhs == rhs;
}

}  // namespace renorm
