#pragma once

/// Seeded generators for every value type. Values are kept small (numerators
/// and denominators in single digits) so exact arithmetic stays cheap and
/// coincidences such as shared breakpoints happen often.

#include <cstdint>
#include <random>

#include "char1/congruence.hpp"
#include "char1/convex.hpp"
#include "char1/paf.hpp"
#include "char1/rational.hpp"
#include "char1/valuation.hpp"

namespace char1 {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  long integer(long lo, long hi);
  bool coin() { return integer(0, 1) == 1; }
  /// n/d with |n| <= num_bound and 1 <= d <= den_bound.
  Rat rat(long num_bound = 6, long den_bound = 4);
  Rat positive_rat();
  /// A point of [lo, hi] on a random grid of step (hi - lo)/d, d <= 8.
  Rat point_in(const Rat& lo, const Rat& hi);
  Rat interior_point(const Rat& lo, const Rat& hi);

  Paf paf(const Rat& lo, const Rat& hi, int max_interior = 4);
  Paf paf() { return paf(0, 1); }
  /// Max of one to four affine functions.
  Paf convex_paf(const Rat& lo, const Rat& hi);
  /// PAF on [0,1] with f(0) = 0.
  Paf anchored_paf();
  /// Mostly nonzero: a zero draw is replaced by t -> t.
  Paf nonzero_paf(const Rat& lo, const Rat& hi);

  Point point(long bound = 3);
  Polygon polygon();
  Polygon polygon_with_origin();
  /// Full-dimensional body with the origin strictly inside.
  Polygon unit_body();
  Direction direction();
  FracBody frac_body();

  /// Up to three intervals (points allowed) inside [lo, hi]; may be empty.
  ClosedSet closed_set(const Rat& lo, const Rat& hi);
  ClosedSet nonempty_closed_set(const Rat& lo, const Rat& hi);

  /// p + q sqrt 2 in [0,1) with q != 0.
  Quad irrational_point();
  /// Rational or irrational point of [0,1).
  Quad circle_point();

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace char1
