#pragma once

/**
 * @file congruence.hpp
 * @brief Restriction congruences f ~ g iff f = g on a closed set K.
 *
 * K is a finite union of closed rational intervals (points allowed). The
 * empty set gives the trivial congruence (everything related), which is
 * representable and reported through is_trivial().
 */

#include <optional>
#include <utility>
#include <vector>

#include "char1/paf.hpp"
#include "char1/rational.hpp"

namespace char1 {

struct Interval {
  Rat a;
  Rat b;
  friend bool operator==(const Interval&, const Interval&) = default;
};

class ClosedSet {
 public:
  ClosedSet() = default;
  /// Sorts and merges overlapping or touching intervals; a > b is an invariant_error.
  explicit ClosedSet(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  bool contains(const Rat& t) const;
  bool within(const Rat& lo, const Rat& hi) const;

  friend bool operator==(const ClosedSet&, const ClosedSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

ClosedSet set_union(const ClosedSet& x, const ClosedSet& y);
ClosedSet set_intersection(const ClosedSet& x, const ClosedSet& y);

/// Piecewise-affine distance to K on [lo, hi]; K must be nonempty.
Paf distance_to(const ClosedSet& k, const Rat& lo, const Rat& hi);

class RestrictionCongruence {
 public:
  explicit RestrictionCongruence(ClosedSet k) : k_(std::move(k)) {}
  const ClosedSet& support_set() const { return k_; }
  bool is_trivial() const { return k_.empty(); }
  friend bool operator==(const RestrictionCongruence&, const RestrictionCongruence&) = default;

 private:
  ClosedSet k_;
};

bool related(const RestrictionCongruence& r, const Paf& f, const Paf& g);
/// f restricted to K is identically 0.
bool class_of_zero_contains(const RestrictionCongruence& r, const Paf& f);
/// Requires a <= b <= c; returns whether b lies in the class of zero.
bool sandwich(const RestrictionCongruence& r, const Paf& a, const Paf& b, const Paf& c);

/// max |f| over K.
Rat quotient_norm(const Paf& f, const ClosedSet& k);
/// clamp(f, quotient_norm(f, K)): related to f with r equal to the quotient norm.
Paf min_representative(const Paf& f, const ClosedSet& k);

/// pi(X) <= pi(Y) in the quotient, read off on K.
bool quotient_leq(const RestrictionCongruence& r, const Paf& x, const Paf& y);
/// H = pos_part(X - Y): in the class of zero exactly when pi(X) <= pi(Y), and
/// X <= Y + H always.
Paf quotient_order_witness(const Paf& x, const Paf& y);

/// Coarsest congruence containing both: restriction to K1 n K2.
RestrictionCongruence join(const RestrictionCongruence& r1, const RestrictionCongruence& r2);
/// Intersection of the relations: restriction to K1 u K2.
RestrictionCongruence meet(const RestrictionCongruence& r1, const RestrictionCongruence& r2);

/// Splits f, which must vanish on K1 n K2, as f1 + f2 with f1 = 0 on K1 and
/// f2 = 0 on K2. f1 = clamp_by(f, M * dist(., K1)) with M = sup_{K2} |f| / dist(., K1).
std::pair<Paf, Paf> join_decompose(const Paf& f, const RestrictionCongruence& r1,
                                   const RestrictionCongruence& r2);

/// Points whose evaluation character factors through the quotient: K itself.
ClosedSet zariski_V(const RestrictionCongruence& r);
/// Point-character membership test in V(r): phi_x kills the bump dist(., K).
bool in_zariski_V(const RestrictionCongruence& r, const Rat& x, const Rat& lo, const Rat& hi);
/// V(r1 ^ r2) = V(r1) u V(r2) and V(r1 v r2) = V(r1) n V(r2).
bool zariski_laws(const RestrictionCongruence& r1, const RestrictionCongruence& r2);

/// Extension to difference pairs of convex PAFs:
/// A - B ~ A' - B' iff A + B' ~ A' + B.
bool fractions_related(const RestrictionCongruence& r, const Paf& a, const Paf& b, const Paf& a2,
                       const Paf& b2);

}  // namespace char1
