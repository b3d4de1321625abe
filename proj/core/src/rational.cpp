#include "mlrelax/rational.hpp"

#include <cctype>

#include "mlrelax/error.hpp"

namespace mlrelax {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+')
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  mpz_class numerator(n, 10);
  mpz_class denominator(std::string(den), 10);
  if (denominator == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  Rational c = value;
  c.canonicalize();
  return c.get_str();
}

}  // namespace mlrelax
