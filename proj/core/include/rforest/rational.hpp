#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace rforest {

// Exact rational scalar. Canonical form (lowest terms, positive denominator)
// is maintained by every helper below; raw mpq_class construction must go
// through rat() or parse_rat.
using Rat = mpq_class;
using Int = mpz_class;

Rat rat(long num, long den = 1);
Rat rat(const Int& num, const Int& den);

// Accepts "p", "-p", "p/q" with nonzero q. Anything else is a
// non_rational_value error (decimals are deliberately rejected).
Rat parse_rat(const std::string& text);

// Lowest-terms form, "p" when the denominator is 1, otherwise "p/q".
std::string format_rat(const Rat& value);

Int floor_rat(const Rat& value);
Int ceil_rat(const Rat& value);
Rat abs_rat(const Rat& value);

// Distances are rationals extended with a single infinite value.
using ExtRat = std::optional<Rat>;  // nullopt = infinite

inline bool is_finite(const ExtRat& d) { return d.has_value(); }

// min(d, s) with min(infinite, s) = s.
Rat truncate_ext(const ExtRat& d, const Rat& s);

std::string format_ext(const ExtRat& d);

// The rational with least denominator, then least numerator, in
// {x : lo R x R hi} where each R is < or <= per the closed flags.
// Interval must be nonempty. Continued-fraction descent; equivalent to
// scanning denominators 1,2,3,... and numerators upward.
Rat simplest_in(const Rat& lo, bool lo_closed, const Rat& hi, bool hi_closed);

}  // namespace rforest
