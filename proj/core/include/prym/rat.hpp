#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace prym {

// Exact arithmetic only: arbitrary-precision integers and rationals.
// Rat is always stored in lowest terms with positive denominator
// (mpq_class canonicalization).
using Int = mpz_class;
using Rat = mpq_class;

// Parses "p", "-p", or "p/q". Throws std::invalid_argument on junk.
Rat rat_from_string(const std::string& s);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& r);

std::string int_to_string(const Int& n);

inline Int rat_num(const Rat& r) { return r.get_num(); }
inline Int rat_den(const Rat& r) { return r.get_den(); }

// Floor/ceil of a rational as integers.
Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

}  // namespace prym
