#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace riordan {

// Exact rational scalar. Arithmetic via GMP; values are always kept in
// canonical form (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

// Parses the canonical "p/q" (or "p") form, base 10. Whitespace is not
// accepted. Throws SyntaxError on malformed input or zero denominator.
Rational rat_parse(const std::string& text);

// Canonical "p/q" rendering; integers print without the "/q" part.
std::string rat_str(const Rational& q);

double rat_double(const Rational& q);

std::vector<Rational> rat_parse_list(const std::string& comma_separated);

}  // namespace riordan
