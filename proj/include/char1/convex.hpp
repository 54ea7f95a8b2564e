#pragma once

/**
 * @file convex.hpp
 * @brief Convex polygons in Q^2 under (hull of union, Minkowski sum).
 *
 * A Polygon stores the exact vertex set of its convex hull in CCW order
 * starting at the lexicographically smallest vertex. Points and segments
 * are allowed (dimension 0 and 1). Elements of the semiring are the
 * polygons containing the origin; the unit E is any full-dimensional body
 * with the origin strictly inside, [-1,1]^2 by default.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "char1/rational.hpp"

namespace char1 {

struct Point {
  Rat x;
  Rat y;

  friend bool operator==(const Point&, const Point&) = default;
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Rat dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
/// Twice the signed area of (o, a, b); > 0 for a left turn.
inline Rat cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// A nonzero linear form psi(v) = p*x + q*y.
class Direction {
 public:
  Direction(Rat p, Rat q);
  const Rat& p() const { return p_; }
  const Rat& q() const { return q_; }
  Point as_point() const { return {p_, q_}; }
  Rat operator()(const Point& v) const { return p_ * v.x + q_ * v.y; }
  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  Rat p_;
  Rat q_;
};

class Polygon {
 public:
  /// Every listed point must be a vertex of the hull of the list (any order);
  /// otherwise invariant_error.
  explicit Polygon(std::vector<Point> vertices);

  /// Convex hull of an arbitrary nonempty point set.
  static Polygon hull(std::vector<Point> points);
  static Polygon origin();
  static Polygon segment(const Point& a, const Point& b);
  /// The axis-aligned square [-h, h]^2.
  static Polygon square(const Rat& half_side);
  /// Default unit body [-1,1]^2.
  static Polygon unit_square() { return square(1); }

  const std::vector<Point>& vertices() const { return vertices_; }
  int dimension() const;
  bool contains(const Point& v) const;
  bool contains_origin() const { return contains({0, 0}); }
  /// Full-dimensional with the origin strictly interior.
  bool origin_interior() const;

  friend bool operator==(const Polygon&, const Polygon&) = default;
  friend Polygon minkowski(const Polygon& a, const Polygon& b);

 private:
  struct Canonical {};
  Polygon(Canonical, std::vector<Point> vertices) : vertices_(std::move(vertices)) {}
  std::vector<Point> vertices_;
};

Polygon hull_union(const Polygon& a, const Polygon& b);
/// Hull of all pairwise vertex sums.
Polygon minkowski(const Polygon& a, const Polygon& b);
/// Dilation q*A for q >= 0.
Polygon dilate(const Rat& q, const Polygon& a);
/// Support function l_A(psi) = max over vertices of psi(v).
Rat support(const Polygon& a, const Direction& psi);

/// Least t >= 0 with v in tE.
Rat gauge(const Point& v, const Polygon& unit);
/// Least t >= 0 with A inside tE.
Rat r_norm_body(const Polygon& a, const Polygon& unit);
/// {psi : l_E(psi) <= 1}; its vertices are the facet normals n/c of E.
Polygon polar(const Polygon& unit);

/// A difference of support functions l_pos - l_neg.
struct FracBody {
  Polygon pos;
  Polygon neg;
};

bool frac_equal(const FracBody& x, const FracBody& y);
FracBody frac_oplus(const FracBody& x, const FracBody& y);
FracBody frac_plus(const FracBody& x, const FracBody& y);
FracBody frac_neg(const FracBody& x);
/// q*X for rational q (negative q swaps the parts).
FracBody frac_scale(const Rat& q, const FracBody& x);
Rat frac_support(const FracBody& x, const Direction& psi);
/// sup over l_E(psi) = 1 of |l_pos(psi) - l_neg(psi)|, exact.
Rat r_norm_frac(const FracBody& x, const Polygon& unit);
/// Directions on which r_norm_frac is attained: polar vertices and the edge
/// normals of both parts, each normalized to l_E = 1.
std::vector<Direction> frac_norm_candidates(const FracBody& x, const Polygon& unit);

/// Normalized character value l_A(psi) / l_E(psi).
Rat char_eval(const Direction& psi, const Polygon& a, const Polygon& unit);
Rat char_eval(const Direction& psi, const FracBody& x, const Polygon& unit);

/// Multiplication by i: (x, y) -> (-y, x).
Polygon rotate_i(const Polygon& a);
bool i_invariant(const Polygon& a);
/// Hull of A, iA, i^2 A, i^3 A.
Polygon i_symmetrize(const Polygon& a);

/// Floating-point euclidean mode: r(A) as the largest vertex norm.
double euclidean_r(const Polygon& a);
/// sup over unit vectors u of l_A(u), evaluated at every vertex direction and
/// on a uniform angular sample.
double euclidean_dual_norm(const Polygon& a, std::size_t angular_samples = 4096);

/// Fraction semifield of origin-containing polygons over the unit `unit`.
class FracBodyModel {
 public:
  using value_type = FracBody;

  explicit FracBodyModel(Polygon unit = Polygon::unit_square());

  const Polygon& unit_body() const { return unit_; }

  FracBody oplus(const FracBody& x, const FracBody& y) const { return frac_oplus(x, y); }
  FracBody plus(const FracBody& x, const FracBody& y) const { return frac_plus(x, y); }
  FracBody neg(const FracBody& x) const { return frac_neg(x); }
  FracBody zero() const { return {Polygon::origin(), Polygon::origin()}; }
  FracBody unit() const { return {unit_, Polygon::origin()}; }
  FracBody div_by_nat(const FracBody& x, std::size_t n) const;
  bool equal(const FracBody& x, const FracBody& y) const { return frac_equal(x, y); }
  Rat r_norm(const FracBody& x) const { return r_norm_frac(x, unit_); }
  std::string describe(const FracBody& x) const;

 private:
  Polygon unit_;
};

}  // namespace char1
