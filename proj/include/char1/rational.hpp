#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace char1 {

/// Arbitrary-precision rational, always kept in canonical (reduced) form.
using Rat = mpq_class;

/// Parses "p" or "p/q" (optional leading '-') into a reduced rational.
/// Throws invariant_error on malformed text or a zero denominator.
Rat parse_rat(std::string_view text);

/// Builds num/den; throws precondition_error when den == 0.
Rat make_rat(long num, long den);

/// Canonical "p/q" text; integers print without a denominator.
std::string to_string(const Rat& q);

inline Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }
inline int sign(const Rat& q) { return sgn(q); }
inline const Rat& max_rat(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline const Rat& min_rat(const Rat& a, const Rat& b) { return b < a ? b : a; }

}  // namespace char1
