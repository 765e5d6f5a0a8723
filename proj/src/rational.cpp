#include "renorm/rational.hpp"

#include <stdexcept>

namespace renorm {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  // mpq_set_str accepts "a/b" and "a"; it rejects whitespace and garbage.
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace renorm
