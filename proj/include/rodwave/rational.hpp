#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rodwave {

/// Arbitrary-precision rational number (GMP).
using Rational = mpq_class;

/// Parses "p/q", "-p/q", an integer, or a finite decimal such as "2.5".
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text, or "p" when the denominator is one.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace rodwave
