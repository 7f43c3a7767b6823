#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace octodp {

using Integer = mpz_class;
/// GMP rationals are kept canonical (lowest terms, positive denominator) by
/// every arithmetic operation; parse_rational canonicalizes on input.
using Rational = mpq_class;

/// Parses "n" or "n/m" with optional sign. No decimal points, no exponents.
Rational parse_rational(std::string_view text);

/// Parses a comma-separated list of rationals.
std::vector<Rational> parse_rational_list(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer lcm_of_denominators(std::span<const Rational> values);

/// Scales a vector of rationals to a primitive integer vector whose first
/// nonzero entry is positive. The zero vector is returned unchanged.
std::vector<Rational> primitive_integer_vector(std::span<const Rational> values);

/// Exact integer power.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace octodp
