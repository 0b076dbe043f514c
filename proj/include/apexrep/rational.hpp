#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace apexrep {

// Exact rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// "p/q" with q > 0, also for integers ("3/1").
std::string to_string(const Rational& r);
// Accepts "p/q" or a bare integer. Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace apexrep
