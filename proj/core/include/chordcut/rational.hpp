#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace chordcut {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses an exact literal: an integer or `p/q` with q != 0. Floats are rejected.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical text form: `p` when integral, otherwise `p/q` in lowest terms.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer floor(const Rational& value);
Integer ceil_div(long long numerator, long long denominator);

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

}  // namespace chordcut
