#pragma once

/**
 * @file valuation.hpp
 * @brief Kink valuations, localization tests and the circle scheme.
 *
 * For a PAF f and an interior point x, the kink f'_+(x) - f'_-(x) is the
 * valuation of f - f(x)E at the point character of x; it is 0 away from
 * breakpoints and, by convention, at the domain ends.
 */

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "char1/paf.hpp"
#include "char1/rational.hpp"

namespace char1 {

/// a + b*sqrt(2) with rational a, b.
class Quad {
 public:
  Quad() = default;
  Quad(Rat a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  Quad(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  bool is_rational() const { return b_ == 0; }
  int sign() const;
  double approx() const;

  friend Quad operator+(const Quad& x, const Quad& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend Quad operator-(const Quad& x, const Quad& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend Quad operator-(const Quad& x) { return {-x.a_, -x.b_}; }
  friend Quad operator*(const Quad& x, const Quad& y) {
    return {x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  /// Division by a nonzero element (the conjugate norm a^2 - 2b^2 is nonzero).
  friend Quad operator/(const Quad& x, const Quad& y);

  friend bool operator==(const Quad&, const Quad&) = default;
  friend bool operator<(const Quad& x, const Quad& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const Quad& x, const Quad& y) { return (x - y).sign() <= 0; }

 private:
  Rat a_{0};
  Rat b_{0};
};

std::string to_string(const Quad& q);

/// f'_+(x) - f'_-(x) at an interior point.
Rat kink(const Paf& f, const Rat& x);
/// Kink of f at x with f(x) = 0 required; 0 at the domain ends.
Rat valuation_at(const Rat& x, const Paf& f);
/// Extended valuation on the fraction semifield; X(x) = 0 required.
Rat extend_valuation(const Rat& x, const Paf& x_elem);
/// V(A - A(x)E) - V(B - B(x)E) for convex A, B with (A - B)(x) = 0.
Rat extend_valuation_split(const Rat& x, const Paf& a, const Paf& b);

/// Kinks of f - f(x)E are >= 0 at every interior breakpoint.
bool convexity_criterion(const Paf& f);

/// A - B lies in the localization at x iff B has zero kink there.
bool localization_member(const Paf& a, const Paf& b, const Rat& x);
/// Zero kink at x: invertible in the localization.
bool is_local_unit(const Paf& x_elem, const Rat& x);
/// Open interval around x0 on which the kink stays 0, when it is 0 at x0.
std::optional<std::pair<Rat, Rat>> zero_kink_neighborhood(const Paf& f, const Rat& x0);

/// Pullback along t -> alpha*t + beta, mapping [0,1] into [0,1].
struct Reparametrization {
  Rat alpha;
  Rat beta;
  Rat operator()(const Rat& t) const { return alpha * t + beta; }
};

/// Local-morphism conditions for X -> X o g between point-localized PAF
/// semirings on [0,1] at base points x' (source) and x (target), checked on
/// `test_set` plus E and the identity function.
bool local_morphism_check(const Reparametrization& g, const Rat& x_source, const Rat& x_target,
                          std::span<const Paf> test_set);

// -- circle R/Z ------------------------------------------------------------

struct QuadPiece {
  Quad slope;
  Quad intercept;
  Quad at(const Quad& s) const { return slope * s + intercept; }
  friend bool operator==(const QuadPiece&, const QuadPiece&) = default;
};

/// Unvalidated circle data as read from input.
struct CircleData {
  std::vector<Quad> breakpoints;
  std::vector<QuadPiece> pieces;
};

/// Continuous piecewise-affine function on R/Z. Piece i covers the arc from
/// breakpoints[i] to breakpoints[i+1] in the lifted coordinate starting at
/// breakpoints[i]; the last arc ends at breakpoints[0] + 1. With no
/// breakpoints the section is the constant pieces[0] (slope 0).
class CircleSection {
 public:
  explicit CircleSection(CircleData data);
  static CircleSection constant(const Quad& c);
  /// Cyclic interpolation of values at increasing points in [0,1).
  static CircleSection interpolate(const std::vector<Quad>& points, const std::vector<Quad>& values);

  const std::vector<Quad>& breakpoints() const { return breaks_; }
  const std::vector<QuadPiece>& pieces() const { return pieces_; }
  bool is_constant() const { return breaks_.empty(); }

  Quad eval(const Quad& s) const;
  /// Right slope minus left slope; 0 off breakpoints.
  Quad kink(const Quad& s) const;

  friend bool operator==(const CircleSection&, const CircleSection&) = default;

 private:
  CircleSection() = default;
  std::size_t arc_of(const Quad& s) const;
  void canonicalize();

  std::vector<Quad> breaks_;
  std::vector<QuadPiece> pieces_;
};

/// Continuity around the wrap and every kink >= 0.
bool circle_section_valid(const CircleData& data);
bool circle_section_valid(const CircleSection& s);
/// Kink sum around the circle; always 0.
Quad circle_kink_sum(const CircleSection& s);

/// A section over the lifted arc [start, end] with start in [0,1) and
/// 0 < end - start <= 1. Breakpoints and pieces use lifted coordinates.
struct ArcSection {
  Quad start;
  Quad end;
  std::vector<Quad> breakpoints;  // strictly inside (start, end)
  std::vector<QuadPiece> pieces;  // breakpoints.size() + 1 pieces
};

ArcSection restrict(const CircleSection& s, const Quad& start, const Quad& end);
/// Kinks >= 0 at interior breakpoints of the arc.
bool arc_section_valid(const ArcSection& a);
/// Glues arcs that cover the circle and agree on overlaps; nullopt otherwise.
std::optional<CircleSection> glue(const std::vector<ArcSection>& arcs);

struct Germ {
  Quad value;
  QuadPiece left;
  QuadPiece right;
  Quad kink;
};
Germ germ(const CircleSection& s, const Quad& point);

struct KDefinedReport {
  bool rational_point;
  Rat kink;
  bool holds;  ///< irrational point: kink == 0; rational point: kink >= 0
};

/// Checks a rational-coefficient germ (left piece a*s + b, right piece
/// a2*s + b2) meeting continuously at s0 in Q(sqrt 2).
KDefinedReport k_defined_check(const Quad& s0, const AffinePiece& left, const AffinePiece& right);
/// Sections with rational coefficients satisfying both pointwise conditions.
bool is_k_defined(const CircleSection& s);
/// A rational strictly between u < v (density witness for rational points).
Rat rational_between(const Quad& u, const Quad& v);

}  // namespace char1
