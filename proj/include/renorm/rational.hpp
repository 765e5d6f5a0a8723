#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace renorm {

using Rational = mpq_class;

/// Renders as "num/den", always with an explicit denominator ("5/1").
std::string to_string(const Rational& q);

/// Accepts "a/b" or a bare integer "a". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace renorm
