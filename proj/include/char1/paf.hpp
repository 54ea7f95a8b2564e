#pragma once

/**
 * @file paf.hpp
 * @brief Continuous piecewise-affine functions on a closed rational interval.
 *
 * Values are stored in canonical minimal form: breakpoints t_0 = lo < ... <
 * t_k = hi (both domain ends included) and one affine piece per cell, with no
 * two adjacent pieces equal. Structural equality of canonical forms is
 * function equality.
 *
 * Affine pieces attain their extrema at cell endpoints, so every sup/inf
 * query below (norms, classification, restricted maxima) is an exact scan of
 * finitely many breakpoint values.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "char1/rational.hpp"

namespace char1 {

struct AffinePiece {
  Rat slope;
  Rat intercept;

  Rat at(const Rat& t) const { return slope * t + intercept; }
  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

class Paf {
 public:
  /// Validates ordering, piece count and continuity, then canonicalizes.
  Paf(std::vector<Rat> breakpoints, std::vector<AffinePiece> pieces);

  static Paf affine(const Rat& lo, const Rat& hi, const Rat& slope, const Rat& intercept);
  static Paf constant(const Rat& lo, const Rat& hi, const Rat& value);
  /// Continuous interpolation of (ts[i], values[i]); ts strictly increasing.
  static Paf interpolate(const std::vector<Rat>& ts, const std::vector<Rat>& values);

  const Rat& lo() const { return breaks_.front(); }
  const Rat& hi() const { return breaks_.back(); }
  const std::vector<Rat>& breakpoints() const { return breaks_; }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  std::vector<Rat> interior_breakpoints() const;

  bool same_domain(const Paf& other) const { return lo() == other.lo() && hi() == other.hi(); }
  bool in_domain(const Rat& t) const { return lo() <= t && t <= hi(); }

  /// Index of the cell [t_i, t_{i+1}] holding t (the right cell at a breakpoint).
  std::size_t cell_of(const Rat& t) const;
  Rat eval(const Rat& t) const;
  Rat operator()(const Rat& t) const { return eval(t); }

  /// One-sided slopes; at the domain ends the missing side equals the other.
  Rat left_slope(const Rat& t) const;
  Rat right_slope(const Rat& t) const;

  friend bool operator==(const Paf&, const Paf&) = default;

 private:
  Paf() = default;
  void canonicalize();

  std::vector<Rat> breaks_;
  std::vector<AffinePiece> pieces_;
};

Rat eval(const Paf& f, const Rat& t);

Paf oplus(const Paf& f, const Paf& g);
Paf plus(const Paf& f, const Paf& g);
Paf neg(const Paf& f);
Paf scale(const Rat& q, const Paf& f);
Paf pointwise_min(const Paf& f, const Paf& g);

/// sup |f| with unit E = constant 1.
Rat r_norm_const(const Paf& f);

struct WeightedNorms {
  Rat r;          ///< sup_{t in ]0,1]} |f(t)| / t
  Rat lipschitz;  ///< max |slope|
};

/// Norms of the anchored model: domain [0,1], f(0) = 0, unit E(t) = t.
WeightedNorms weighted_norms(const Paf& f);
bool is_anchored(const Paf& f);

/// Slopes nondecreasing left to right.
bool is_convex(const Paf& f);

/// max(min(f, c), -c).
Paf clamp(const Paf& f, const Rat& c);
/// max(min(f, bound), -bound) for a nonnegative PAF bound.
Paf clamp_by(const Paf& f, const Paf& bound);

/// max |f| over [a, b] (a == b allowed).
Rat max_abs_on(const Paf& f, const Rat& a, const Rat& b);
/// Minimum and maximum over the whole domain, with the smallest attaining points.
struct Extremum {
  Rat value;
  Rat at;
};
Extremum global_min(const Paf& f);
Extremum global_max(const Paf& f);

/// X o g for g(t) = alpha*t + beta, as a function on [lo, hi].
Paf pullback(const Paf& f, const Rat& alpha, const Rat& beta, const Rat& lo, const Rat& hi);

/// Sorted union of two sorted rational lists without duplicates.
std::vector<Rat> merge_grids(const std::vector<Rat>& a, const std::vector<Rat>& b);

/// Union of f's breakpoints with `samples` evenly spaced points (samples >= 2).
std::vector<std::pair<Rat, Rat>> plot_rows(const Paf& f, std::size_t samples);

/// Semifield model on a fixed domain with unit E = constant 1.
class PafModel {
 public:
  using value_type = Paf;

  PafModel(Rat lo, Rat hi);

  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }

  Paf oplus(const Paf& x, const Paf& y) const;
  Paf plus(const Paf& x, const Paf& y) const;
  Paf neg(const Paf& x) const;
  Paf zero() const { return Paf::constant(lo_, hi_, 0); }
  Paf unit() const { return Paf::constant(lo_, hi_, 1); }
  Paf div_by_nat(const Paf& x, std::size_t n) const;
  bool equal(const Paf& x, const Paf& y) const { return x == y; }
  Rat r_norm(const Paf& x) const;
  std::string describe(const Paf& x) const;

 private:
  void check(const Paf& x) const;
  Rat lo_;
  Rat hi_;
};

/// Anchored sub-semifield on [0,1]: elements vanish at 0, unit E(t) = t.
/// Membership is validated on every operation.
class AnchoredPafModel {
 public:
  using value_type = Paf;

  Paf oplus(const Paf& x, const Paf& y) const;
  Paf plus(const Paf& x, const Paf& y) const;
  Paf neg(const Paf& x) const;
  Paf zero() const { return Paf::constant(0, 1, 0); }
  Paf unit() const { return Paf::affine(0, 1, 1, 0); }
  Paf div_by_nat(const Paf& x, std::size_t n) const;
  bool equal(const Paf& x, const Paf& y) const { return x == y; }
  Rat r_norm(const Paf& x) const;
  Rat f_norm(const Paf& x) const;
  std::string describe(const Paf& x) const;

 private:
  static void check(const Paf& x);
};

}  // namespace char1
