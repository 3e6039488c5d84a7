#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace liftlab {

// Arbitrary-precision rational, always in lowest terms.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// High-precision binary float used only where irrational values appear
// (p-th roots). 64 significant decimal digits internally; reports are
// rounded to the requested number of digits.
using Decimal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<64>,
                                              boost::multiprecision::et_off>;

inline constexpr int kMaxDecimalDigits = 60;
inline constexpr int kDefaultDecimalDigits = 30;

// Either an exact value or a decimal approximation.
using Scalar = std::variant<Rational, Decimal>;

/// Malformed input: bad shapes, axioms violated, preconditions broken.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed its configured size limit.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A post-condition that must hold by construction failed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parses "p/q" or "p" (optionally signed). Throws ValidationError.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& value);

std::string to_decimal_string(const Rational& value, int digits = kDefaultDecimalDigits);
std::string to_decimal_string(const Decimal& value, int digits = kDefaultDecimalDigits);
std::string to_decimal_string(const Scalar& value, int digits = kDefaultDecimalDigits);

Decimal to_decimal(const Rational& value);
Decimal to_decimal(const Scalar& value);

bool is_exact(const Scalar& value);

/// Returns the exact value; throws ValidationError for a decimal scalar.
const Rational& exact_value(const Scalar& value);

/// a <= b, exactly when both are rational, else within `tolerance`.
bool scalar_less_equal(const Scalar& a, const Scalar& b, const Decimal& tolerance);

/// Comparison tolerance for decimal (p-th root) values.
Decimal decimal_tolerance();

Rational truncated_add(const Rational& a, const Rational& b);
Rational truncated_sub(const Rational& a, const Rational& b);

Rational numerator_of(const Rational& value);
Rational denominator_of(const Rational& value);


Rational power(const Rational& base, unsigned exponent);
bool is_integer(const Rational& value);

}  // namespace liftlab
