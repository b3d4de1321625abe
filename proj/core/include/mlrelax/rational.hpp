#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mlrelax {

using Rational = mpq_class;

// Accepts "p/q", "p" and an optional leading sign. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

// Canonical "p/q" form, or "p" when the denominator is one.
std::string to_string(const Rational& value);

}  // namespace mlrelax
