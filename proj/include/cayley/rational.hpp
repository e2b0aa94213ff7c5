#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace cayley {

/// Exact rational number. GMP keeps every value in lowest terms with a
/// positive denominator as long as inputs are canonicalized, which the
/// parsing helpers below guarantee.
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/// Parses "p/q" or an integer literal ("-3", "+7"). Throws std::invalid_argument
/// on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "num/den" always, e.g. "3/1", "-1/2", "0/1".
std::string to_fraction_string(const Rational& value);

/// Integers without a denominator, everything else as "num/den".
std::string to_plain_string(const Rational& value);

/// num/den in lowest terms; throws std::invalid_argument when den == 0.
Rational make_rational(long num, long den);

Rational factorial(unsigned n);

} // namespace cayley
