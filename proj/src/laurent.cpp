#include "renorm/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace renorm {

namespace {

// Saturating add so that exact operands stay exact.
int add_orders(int a, int b) {
  if (a == LaurentSeries::kExact || b == LaurentSeries::kExact) return LaurentSeries::kExact;
  return a + b;
}

// Lowest exponent the true value can have: stored valuation, or the first
// untrusted order for a truncated zero.
int effective_valuation(const LaurentSeries& s) {
  if (auto v = s.valuation()) return *v;
  return s.is_exact() ? LaurentSeries::kExact : s.truncation() + 1;
}

}  // namespace

LaurentSeries::LaurentSeries(Rational constant, int truncation) : trunc_(truncation) {
  if (constant != 0) coeffs_.emplace(0, std::move(constant));
  drop_untrusted();
}

LaurentSeries LaurentSeries::term(int exponent, Rational coefficient, int truncation) {
  LaurentSeries s;
  s.trunc_ = truncation;
  if (coefficient != 0) s.coeffs_.emplace(exponent, std::move(coefficient));
  s.drop_untrusted();
  return s;
}

LaurentSeries LaurentSeries::zero(int truncation) {
  LaurentSeries s;
  s.trunc_ = truncation;
  return s;
}

Rational LaurentSeries::coefficient(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

std::optional<int> LaurentSeries::valuation() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.begin()->first;
}

LaurentSeries LaurentSeries::with_truncation(int truncation) const {
  LaurentSeries s = *this;
  s.trunc_ = std::min(trunc_, truncation);
  s.drop_untrusted();
  return s;
}

LaurentSeries LaurentSeries::pole_part() const {
  LaurentSeries s;
  for (const auto& [n, c] : coeffs_)
    if (n < 0) s.coeffs_.emplace(n, c);
  // Every pole coefficient is known once eps^-1 is trusted.
  s.trunc_ = trunc_ >= -1 ? kExact : trunc_;
  return s;
}

LaurentSeries LaurentSeries::regular_part() const {
  LaurentSeries s;
  for (const auto& [n, c] : coeffs_)
    if (n >= 0) s.coeffs_.emplace(n, c);
  s.trunc_ = trunc_;
  return s;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries s = *this;
  for (auto& [n, c] : s.coeffs_) c = -c;
  return s;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& other) {
  trunc_ = std::min(trunc_, other.trunc_);
  for (const auto& [n, c] : other.coeffs_) {
    if (n > trunc_) break;
    auto [it, inserted] = coeffs_.emplace(n, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  drop_untrusted();
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& other) { return *this += -other; }

LaurentSeries& LaurentSeries::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [n, c] : coeffs_) c *= scalar;
  return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries out;
  const int va = effective_valuation(a);
  const int vb = effective_valuation(b);
  out.trunc_ = std::min(add_orders(a.trunc_, vb), add_orders(b.trunc_, va));
  for (const auto& [na, ca] : a.coeffs_) {
    for (const auto& [nb, cb] : b.coeffs_) {
      const int n = na + nb;
      if (n > out.trunc_) break;
      auto [it, inserted] = out.coeffs_.emplace(n, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out.coeffs_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  const int limit = std::min(a.trunc_, b.trunc_);
  auto ia = a.coeffs_.begin();
  auto ib = b.coeffs_.begin();
  for (;;) {
    const bool ea = ia == a.coeffs_.end() || ia->first > limit;
    const bool eb = ib == b.coeffs_.end() || ib->first > limit;
    if (ea || eb) return ea && eb;
    if (ia->first != ib->first || ia->second != ib->second) return false;
    ++ia;
    ++ib;
  }
}

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  if (coeffs_.empty()) os << "0";
  bool first = true;
  for (const auto& [n, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << renorm::to_string(c) << ')';
    if (n != 0) os << "*eps^" << n;
  }
  if (!is_exact()) os << " + O(eps^" << trunc_ + 1 << ')';
  return os.str();
}

void LaurentSeries::drop_untrusted() {
  if (trunc_ == kExact) return;
  coeffs_.erase(coeffs_.upper_bound(trunc_), coeffs_.end());
}

}  // namespace renorm
