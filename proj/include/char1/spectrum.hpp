#pragma once

/**
 * @file spectrum.hpp
 * @brief Normalized characters of the two concrete models.
 *
 * A PAF character is evaluation at a point of the domain; a convex-body
 * character is the normalized support evaluation l_A(psi) / l_E(psi). Both
 * send (+) to max, + to + and E to 1.
 */

#include <optional>
#include <variant>

#include "char1/convex.hpp"
#include "char1/paf.hpp"
#include "char1/rational.hpp"

namespace char1 {

struct PointEval {
  Rat t;
  friend bool operator==(const PointEval&, const PointEval&) = default;
};

struct SupportDir {
  Direction psi;
  Polygon unit;
  friend bool operator==(const SupportDir&, const SupportDir&) = default;
};

using Character = std::variant<PointEval, SupportDir>;

Rat apply(const Character& phi, const Paf& x);
Rat apply(const Character& phi, const Polygon& a);
Rat apply(const Character& phi, const FracBody& x);

/// Two direction characters are the same map iff their directions are
/// positive multiples of each other; this rescales psi so that l_E(psi) = 1.
SupportDir normalized(const SupportDir& phi);
bool same_character(const Character& a, const Character& b);

struct Attainment {
  Character phi;
  Rat value;        ///< apply(phi, X)
  bool degenerate;  ///< X == 0: any character attains, a default is returned
};

/// Character with |phi(X)| = r(X). Ties go to the smallest breakpoint / the
/// first polar vertex in canonical order.
Attainment attain_norm(const Paf& x);
Attainment attain_norm(const Polygon& a, const Polygon& unit);
Attainment attain_norm(const FracBody& x, const Polygon& unit);

struct Classification {
  bool nonneg;
  bool regular;
  bool absorbing;
  std::optional<Rat> epsilon;  ///< min value when absorbing
};

/// Positive / regular / absorbing via the exact global minimum and maximum.
Classification classify(const Paf& x);

/// Element distinguishing two distinct characters of the PAF model on
/// [lo, hi]: the identity function t.
Paf separate(const PointEval& a, const PointEval& b, const Rat& lo, const Rat& hi);
/// Segment [0, u] with u an axis vector on which the two supports differ.
Polygon separate(const SupportDir& a, const SupportDir& b);

/// lambda*Z + mu*E taking the prescribed values alpha at a and beta at b.
Paf separate_prescribed(const PointEval& a, const PointEval& b, const Rat& alpha, const Rat& beta,
                        const Rat& lo, const Rat& hi);
FracBody separate_prescribed(const SupportDir& a, const SupportDir& b, const Rat& alpha, const Rat& beta);

}  // namespace char1
