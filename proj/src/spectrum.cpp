#include "char1/spectrum.hpp"

#include <array>

#include "char1/error.hpp"

namespace char1 {

namespace {

const PointEval& as_point(const Character& phi) {
  if (const auto* p = std::get_if<PointEval>(&phi)) return *p;
  throw precondition_error("direction character applied to a PAF");
}

const SupportDir& as_dir(const Character& phi) {
  if (const auto* d = std::get_if<SupportDir>(&phi)) return *d;
  throw precondition_error("point character applied to a convex body");
}

// Solves lambda*a1 + mu = alpha, lambda*a2 + mu = beta.
std::pair<Rat, Rat> solve_affine(const Rat& a1, const Rat& a2, const Rat& alpha, const Rat& beta) {
  const Rat lambda = (alpha - beta) / (a1 - a2);
  const Rat mu = (-a2 * alpha + a1 * beta) / (a1 - a2);
  return {lambda, mu};
}

}  // namespace

Rat apply(const Character& phi, const Paf& x) { return x.eval(as_point(phi).t); }

Rat apply(const Character& phi, const Polygon& a) {
  const SupportDir& d = as_dir(phi);
  return char_eval(d.psi, a, d.unit);
}

Rat apply(const Character& phi, const FracBody& x) {
  const SupportDir& d = as_dir(phi);
  return char_eval(d.psi, x, d.unit);
}

SupportDir normalized(const SupportDir& phi) {
  const Rat s = support(phi.unit, phi.psi);
  if (s <= 0) throw precondition_error("unit body has zero support in this direction");
  return {Direction(phi.psi.p() / s, phi.psi.q() / s), phi.unit};
}

bool same_character(const Character& a, const Character& b) {
  if (a.index() != b.index()) return false;
  if (const auto* pa = std::get_if<PointEval>(&a)) return *pa == std::get<PointEval>(b);
  const auto& da = std::get<SupportDir>(a);
  const auto& db = std::get<SupportDir>(b);
  return da.unit == db.unit && normalized(da).psi == normalized(db).psi;
}

Attainment attain_norm(const Paf& x) {
  const Rat r = r_norm_const(x);
  if (r == 0) return {PointEval{x.lo()}, 0, true};
  for (const Rat& t : x.breakpoints()) {
    const Rat v = x.eval(t);
    if (abs_rat(v) == r) return {PointEval{t}, v, false};
  }
  throw std::logic_error("norm not attained at a breakpoint");
}

Attainment attain_norm(const Polygon& a, const Polygon& unit) {
  const Polygon dual = polar(unit);
  const Rat r = r_norm_body(a, unit);
  const auto& pv = dual.vertices();
  const Direction first(pv.front().x, pv.front().y);
  if (r == 0) return {SupportDir{first, unit}, 0, true};
  for (const Point& v : pv) {
    const Direction psi(v.x, v.y);
    const Rat s = support(a, psi);
    if (s == r) return {SupportDir{psi, unit}, s, false};
  }
  throw std::logic_error("norm not attained at a polar vertex");
}

Attainment attain_norm(const FracBody& x, const Polygon& unit) {
  const Rat r = r_norm_frac(x, unit);
  const std::vector<Direction> cands = frac_norm_candidates(x, unit);
  if (r == 0) return {SupportDir{cands.front(), unit}, 0, true};
  for (const Direction& psi : cands) {
    const Rat v = frac_support(x, psi);
    if (abs_rat(v) == r) return {SupportDir{psi, unit}, v, false};
  }
  throw std::logic_error("norm not attained at a candidate direction");
}

Classification classify(const Paf& x) {
  const Rat lo = global_min(x).value;
  const Rat hi = global_max(x).value;
  Classification c{lo >= 0, lo > 0 || hi < 0, lo > 0, std::nullopt};
  if (c.absorbing) c.epsilon = lo;
  return c;
}

Paf separate(const PointEval& a, const PointEval& b, const Rat& lo, const Rat& hi) {
  if (a == b) throw precondition_error("cannot separate a character from itself");
  if (!(lo <= a.t && a.t <= hi && lo <= b.t && b.t <= hi)) {
    throw precondition_error("point character outside the domain");
  }
  return Paf::affine(lo, hi, 1, 0);
}

Polygon separate(const SupportDir& a, const SupportDir& b) {
  if (!(a.unit == b.unit)) throw precondition_error("characters over different unit bodies");
  if (same_character(a, b)) throw precondition_error("cannot separate a character from itself");
  const std::array<Point, 4> axes{Point{1, 0}, Point{0, 1}, Point{-1, 0}, Point{0, -1}};
  for (const Point& u : axes) {
    const Polygon seg = Polygon::segment({0, 0}, u);
    if (char_eval(a.psi, seg, a.unit) != char_eval(b.psi, seg, b.unit)) return seg;
  }
  throw std::logic_error("axis segments failed to separate distinct characters");
}

Paf separate_prescribed(const PointEval& a, const PointEval& b, const Rat& alpha, const Rat& beta,
                        const Rat& lo, const Rat& hi) {
  const Paf z = separate(a, b, lo, hi);
  const auto [lambda, mu] = solve_affine(z.eval(a.t), z.eval(b.t), alpha, beta);
  return plus(scale(lambda, z), Paf::constant(lo, hi, mu));
}

FracBody separate_prescribed(const SupportDir& a, const SupportDir& b, const Rat& alpha, const Rat& beta) {
  const Polygon z = separate(a, b);
  const auto [lambda, mu] = solve_affine(char_eval(a.psi, z, a.unit), char_eval(b.psi, z, b.unit), alpha, beta);
  const FracBody zf{z, Polygon::origin()};
  const FracBody ef{a.unit, Polygon::origin()};
  return frac_plus(frac_scale(lambda, zf), frac_scale(mu, ef));
}

}  // namespace char1
