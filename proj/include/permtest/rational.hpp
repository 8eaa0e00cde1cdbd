#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace permtest {

/// Exact rational arithmetic. Every distance, defect and probability is one of these.
using Rational = mpq_class;

/// Canonical reduced fraction p/q from integers; throws ValidationError on a zero denominator.
Rational make_rational(std::int64_t numerator, std::int64_t denominator = 1);

/// "p/q" in lowest terms, with q = 1 for integers.
std::string to_fraction_string(const Rational& value);

/// Decimal rendering with the given number of significant digits.
std::string to_decimal_string(const Rational& value, int significant_digits = 12);

/// "p/q (decimal)" as printed by the command-line tool.
std::string to_display_string(const Rational& value);

/// Accepts "p/q", an integer, or a finite decimal such as "0.25".
Rational parse_rational(std::string_view text);

double to_double(const Rational& value);

}  // namespace permtest
