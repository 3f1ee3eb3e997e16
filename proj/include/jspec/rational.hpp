#pragma once

#include <gmpxx.h>

#include <string>

namespace jspec {

// All arithmetic in the math core is exact: arbitrary-precision integers and
// canonical rationals, never floating point.
using Int = mpz_class;
using Rat = mpq_class;

// Canonical rational num/den; den must be nonzero.
Rat make_rat(const Int& num, const Int& den);

// Lowest-terms rendering: "p" when the denominator is 1, otherwise "p/q".
std::string rat_string(const Rat& r);

// floor(r), rounding toward minus infinity.
Int rat_floor(const Rat& r);

// Accepts "p" or "p/q" with optional leading sign on p.
Rat parse_rat(const std::string& text);

inline double rat_double(const Rat& r) { return r.get_d(); }

}  // namespace jspec
