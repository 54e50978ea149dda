#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fano10 {

using Integer = mpz_class;

/// Exact rational number. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator; make_rational() enforces the same for values
/// assembled from a numerator/denominator pair.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error if den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q" (decimal). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is one, "p/q" otherwise.
std::string to_string(const Rational& value);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// True iff value is the square of a rational number.
bool is_rational_square(const Rational& value);

/// Square root of a rational square. Throws std::domain_error otherwise.
Rational rational_sqrt(const Rational& value);

}  // namespace fano10
