#include "liftlab/rational.hpp"

#include <cctype>
#include <sstream>

namespace liftlab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ValidationError("not a rational number: \"" + std::string(text) + "\"");
  }
  const boost::multiprecision::mpz_int n{std::string(num)};
  const boost::multiprecision::mpz_int d{std::string(den)};
  if (d == 0) throw ValidationError("zero denominator in \"" + std::string(text) + "\"");
  Rational value(n, d);
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Decimal& value, int digits) {
  if (digits < 1) digits = 1;
  if (digits > kMaxDecimalDigits) digits = kMaxDecimalDigits;
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << value;
  std::string s = out.str();
  if (s.rfind("-0.", 0) == 0 && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string to_decimal_string(const Rational& value, int digits) {
  return to_decimal_string(to_decimal(value), digits);
}

std::string to_decimal_string(const Scalar& value, int digits) {
  return std::visit([digits](const auto& v) { return to_decimal_string(v, digits); }, value);
}

Decimal to_decimal(const Rational& value) {
  Decimal num(boost::multiprecision::numerator(value));
  Decimal den(boost::multiprecision::denominator(value));
  return num / den;
}

Decimal to_decimal(const Scalar& value) {
  if (const auto* q = std::get_if<Rational>(&value)) return to_decimal(*q);
  return std::get<Decimal>(value);
}

bool is_exact(const Scalar& value) { return std::holds_alternative<Rational>(value); }

const Rational& exact_value(const Scalar& value) {
  if (const auto* q = std::get_if<Rational>(&value)) return *q;
  throw ValidationError("value is not exact: " + to_decimal_string(value));
}

Decimal decimal_tolerance() { return Decimal("1e-12"); }

bool scalar_less_equal(const Scalar& a, const Scalar& b, const Decimal& tolerance) {
  if (is_exact(a) && is_exact(b)) return std::get<Rational>(a) <= std::get<Rational>(b);
  return to_decimal(a) <= to_decimal(b) + tolerance;
}

Rational truncated_add(const Rational& a, const Rational& b) {
  Rational s = a + b;
  return s > 1 ? Rational(1) : s;
}

Rational truncated_sub(const Rational& a, const Rational& b) {
  Rational s = a - b;
  return s < 0 ? Rational(0) : s;
}

Rational numerator_of(const Rational& value) { return Rational(boost::multiprecision::numerator(value)); }

Rational denominator_of(const Rational& value) { return Rational(boost::multiprecision::denominator(value)); }

Rational power(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

bool is_integer(const Rational& value) { return boost::multiprecision::denominator(value) == 1; }

}  // namespace liftlab
