#pragma once

#include <gmpxx.h>

#include <string>

namespace coderco {

// Exact rational scalar, always held in lowest terms with positive
// denominator (gmp's canonical form).
using Rat = mpq_class;

Rat rat(long num, long den = 1);

// Accepts "p", "-p", or "p/q" with q > 0; canonicalizes. Throws ParseError
// on anything else (including "1/0").
Rat parse_rat(const std::string& text);

// Lowest-terms rendering: "p" when the denominator is 1, else "p/q".
std::string format_rat(const Rat& value);

}  // namespace coderco
