#pragma once

#include <gmpxx.h>

#include <string>

namespace geomrep {

// Exact rational scalar. mpq_class keeps values in reduced form with a
// positive denominator, which is the invariant all modules rely on.
using Rat = mpq_class;
using Int = mpz_class;

/// Canonicalized rational from an integer pair.
Rat rat(long num, long den = 1);

/// Parses "num/den" or "num" (arbitrary precision, den > 0 after reduction).
Rat rat_from_string(const std::string& text);

/// Serializes as "num/den" (always with an explicit denominator).
std::string rat_to_string(const Rat& q);

double to_double(const Rat& q);

/// Largest r = a / 2^bits with r*r <= q. Requires q >= 0.
Rat sqrt_lower(const Rat& q, unsigned bits = 64);

/// Smallest r = a / 2^bits with r*r >= q. Requires q >= 0.
Rat sqrt_upper(const Rat& q, unsigned bits = 64);

/// Best rational approximation of x with denominator <= max_den,
/// via the continued-fraction convergents of x.
Rat rationalize(double x, unsigned long max_den = (1ul << 20));

}  // namespace geomrep
