#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace parabolic {

/// Arbitrary-precision rational scalar used throughout the library.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed input or q == 0.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form ("p" when the denominator is 1).
std::string to_string(const Rational& q);

inline Rational make_rational(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace parabolic
