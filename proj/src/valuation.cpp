#include "char1/valuation.hpp"

#include <algorithm>
#include <cmath>

#include "char1/error.hpp"

namespace char1 {

// -- Quad ------------------------------------------------------------------

int Quad::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: |a| vs |b| sqrt 2, never equal since sqrt 2 is irrational.
  const Rat d = a_ * a_ - 2 * b_ * b_;
  return sa * sgn(d);
}

double Quad::approx() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }

Quad operator/(const Quad& x, const Quad& y) {
  const Rat norm = y.a_ * y.a_ - 2 * y.b_ * y.b_;
  if (norm == 0) throw precondition_error("division by zero in Q(sqrt 2)");
  const Quad num = x * Quad(y.a_, -y.b_);
  return {num.a_ / norm, num.b_ / norm};
}

std::string to_string(const Quad& q) {
  if (q.is_rational()) return to_string(q.a());
  return to_string(q.a()) + (q.b() < 0 ? " - " : " + ") + to_string(abs_rat(q.b())) + "*sqrt2";
}

Rat rational_between(const Quad& u, const Quad& v) {
  if (!(u < v)) throw precondition_error("rational_between needs u < v");
  // Shrink a rational enclosure [lo, hi] of sqrt 2 until the enclosures of
  // u and v separate, then take a midpoint.
  Rat lo(7, 5);
  Rat hi(3, 2);
  const auto enclose = [&](const Quad& x) {
    const Rat p = x.a() + x.b() * lo;
    const Rat q = x.a() + x.b() * hi;
    return std::pair<Rat, Rat>{min_rat(p, q), max_rat(p, q)};
  };
  for (;;) {
    const auto [ulo, uhi] = enclose(u);
    const auto [vlo, vhi] = enclose(v);
    if (uhi < vlo) {
      Rat m = (uhi + vlo) / 2;
      return m;
    }
    const Rat mid = (lo + hi) / 2;
    if (mid * mid < 2) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
}

// -- PAF kinks ---------------------------------------------------------------

namespace {

bool is_endpoint(const Paf& f, const Rat& x) { return x == f.lo() || x == f.hi(); }

void require_zero(const Paf& f, const Rat& x) {
  if (f.eval(x) != 0) throw precondition_error("valuation needs f(x) = 0 at x = " + to_string(x));
}

Paf shift_to_zero(const Paf& f, const Rat& x) {
  return plus(f, Paf::constant(f.lo(), f.hi(), -f.eval(x)));
}

// V_x(f - f(x)E), with the endpoint convention.
Rat point_valuation(const Paf& f, const Rat& x) {
  if (!f.in_domain(x)) throw precondition_error("point outside the domain");
  return is_endpoint(f, x) ? Rat(0) : kink(f, x);
}

}  // namespace

Rat kink(const Paf& f, const Rat& x) {
  if (!(f.lo() < x && x < f.hi())) {
    throw precondition_error("kink needs an interior point, got " + to_string(x));
  }
  return f.right_slope(x) - f.left_slope(x);
}

Rat valuation_at(const Rat& x, const Paf& f) {
  require_zero(f, x);
  return point_valuation(f, x);
}

Rat extend_valuation(const Rat& x, const Paf& x_elem) {
  require_zero(x_elem, x);
  return point_valuation(x_elem, x);
}

Rat extend_valuation_split(const Rat& x, const Paf& a, const Paf& b) {
  if (!is_convex(a) || !is_convex(b)) throw precondition_error("split valuation needs convex A and B");
  if (a.eval(x) != b.eval(x)) throw precondition_error("split valuation needs (A - B)(x) = 0");
  return valuation_at(x, shift_to_zero(a, x)) - valuation_at(x, shift_to_zero(b, x));
}

bool convexity_criterion(const Paf& f) {
  for (const Rat& x : f.interior_breakpoints()) {
    if (extend_valuation(x, shift_to_zero(f, x)) < 0) return false;
  }
  return true;
}

bool is_local_unit(const Paf& x_elem, const Rat& x) {
  return extend_valuation(x, shift_to_zero(x_elem, x)) == 0;
}

bool localization_member(const Paf& a, const Paf& b, const Rat& x) {
  if (!a.same_domain(b)) throw precondition_error("domain mismatch");
  return is_local_unit(b, x);
}

std::optional<std::pair<Rat, Rat>> zero_kink_neighborhood(const Paf& f, const Rat& x0) {
  if (kink(f, x0) != 0) return std::nullopt;
  const auto& bp = f.breakpoints();
  const auto next = std::upper_bound(bp.begin(), bp.end(), x0);
  return std::pair<Rat, Rat>{*(next - 1), *next};
}

bool local_morphism_check(const Reparametrization& g, const Rat& x_source, const Rat& x_target,
                          std::span<const Paf> test_set) {
  const Rat g0 = g(0);
  const Rat g1 = g(1);
  if (g0 < 0 || g0 > 1 || g1 < 0 || g1 > 1) {
    throw precondition_error("reparametrization does not map [0,1] into [0,1]");
  }
  if (x_source < 0 || x_source > 1 || x_target < 0 || x_target > 1) {
    throw precondition_error("base points must lie in [0,1]");
  }
  std::vector<Paf> elems{Paf::constant(0, 1, 1), Paf::affine(0, 1, 1, 0)};
  elems.insert(elems.end(), test_set.begin(), test_set.end());
  for (const Paf& x : elems) {
    if (x.lo() != 0 || x.hi() != 1) throw precondition_error("test elements must live on [0,1]");
    const Paf image = pullback(x, g.alpha, g.beta, 0, 1);
    if (image.eval(x_target) != x.eval(x_source)) return false;
    const bool src_pos = point_valuation(x, x_source) > 0;
    const bool tgt_pos = point_valuation(image, x_target) > 0;
    if (src_pos != tgt_pos) return false;
  }
  return true;
}

// -- circle ------------------------------------------------------------------

namespace {

bool in_unit_interval(const Quad& s) { return Quad(Rat(0)) <= s && s < Quad(Rat(1)); }

Quad midpoint(const Quad& u, const Quad& v) { return (u + v) * Quad(Rat(1, 2)); }

// Piece expressed in a coordinate shifted by w: a*(p + w) + c = a*p + (c + a*w).
QuadPiece shifted(const QuadPiece& p, const Quad& w) { return {p.slope, p.intercept + p.slope * w}; }

bool continuous(const CircleData& d) {
  const std::size_t m = d.breakpoints.size();
  if (m == 0) return d.pieces.size() == 1 && d.pieces[0].slope == Quad();
  for (std::size_t i = 0; i < m; ++i) {
    const Quad end = i + 1 < m ? d.breakpoints[i + 1] : d.breakpoints[0] + Quad(Rat(1));
    const std::size_t nxt = (i + 1) % m;
    const Quad next_coord = i + 1 < m ? end : d.breakpoints[0];
    if (d.pieces[i].at(end) != d.pieces[nxt].at(next_coord)) return false;
  }
  return true;
}

void check_shape(const CircleData& d) {
  const std::size_t m = d.breakpoints.size();
  if (d.pieces.size() != std::max<std::size_t>(m, 1)) {
    throw invariant_error("circle section needs one piece per arc");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!in_unit_interval(d.breakpoints[i])) throw invariant_error("circle breakpoints must lie in [0,1)");
    if (i > 0 && !(d.breakpoints[i - 1] < d.breakpoints[i])) {
      throw invariant_error("circle breakpoints must be strictly increasing");
    }
  }
}

}  // namespace

CircleSection::CircleSection(CircleData data) {
  check_shape(data);
  if (!continuous(data)) throw invariant_error("circle section is discontinuous");
  breaks_ = std::move(data.breakpoints);
  pieces_ = std::move(data.pieces);
  canonicalize();
}

CircleSection CircleSection::constant(const Quad& c) {
  CircleSection s;
  s.pieces_ = {QuadPiece{Quad(), c}};
  return s;
}

CircleSection CircleSection::interpolate(const std::vector<Quad>& points, const std::vector<Quad>& values) {
  if (points.size() != values.size() || points.empty()) {
    throw invariant_error("circle interpolation needs matching nonempty lists");
  }
  if (points.size() == 1) return constant(values[0]);
  CircleData d{points, {}};
  const std::size_t m = points.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Quad u = points[i];
    const Quad v = i + 1 < m ? points[i + 1] : points[0] + Quad(Rat(1));
    const Quad slope = (values[(i + 1) % m] - values[i]) / (v - u);
    d.pieces.push_back({slope, values[i] - slope * u});
  }
  return CircleSection(std::move(d));
}

void CircleSection::canonicalize() {
  bool changed = true;
  while (changed && !breaks_.empty()) {
    changed = false;
    const std::size_t m = breaks_.size();
    for (std::size_t i = m; i-- > 0;) {
      const QuadPiece prev = i > 0 ? pieces_[i - 1] : shifted(pieces_[m - 1], Quad(Rat(1)));
      if (pieces_[i] == prev) {
        breaks_.erase(breaks_.begin() + static_cast<std::ptrdiff_t>(i));
        if (pieces_.size() > 1) pieces_.erase(pieces_.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (breaks_.empty()) {
    // Only a slope-0 piece survives a full turn.
    const Quad c = pieces_.front().intercept;
    pieces_.assign(1, QuadPiece{Quad(), c});
  }
}

std::size_t CircleSection::arc_of(const Quad& s) const {
  if (!in_unit_interval(s)) throw precondition_error("circle point must lie in [0,1)");
  if (breaks_.empty()) return 0;
  const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), s);
  if (it == breaks_.begin()) return breaks_.size() - 1;
  return static_cast<std::size_t>(it - breaks_.begin()) - 1;
}

Quad CircleSection::eval(const Quad& s) const {
  const std::size_t i = arc_of(s);
  if (breaks_.empty()) return pieces_[0].intercept;
  const Quad coord = s < breaks_[i] ? s + Quad(Rat(1)) : s;
  return pieces_[i].at(coord);
}

Quad CircleSection::kink(const Quad& s) const {
  const std::size_t i = arc_of(s);
  if (breaks_.empty() || breaks_[i] != s) return Quad();
  const std::size_t m = breaks_.size();
  return pieces_[i].slope - pieces_[(i + m - 1) % m].slope;
}

bool circle_section_valid(const CircleData& data) {
  try {
    return circle_section_valid(CircleSection(data));
  } catch (const invariant_error&) {
    return false;
  }
}

bool circle_section_valid(const CircleSection& s) {
  return std::all_of(s.breakpoints().begin(), s.breakpoints().end(),
                     [&](const Quad& b) { return s.kink(b).sign() >= 0; });
}

Quad circle_kink_sum(const CircleSection& s) {
  Quad sum;
  for (const Quad& b : s.breakpoints()) sum = sum + s.kink(b);
  return sum;
}

namespace {

// Piece of the section, in lifted coordinate p in [0,2), valid on a small
// interval to the right of p.
QuadPiece piece_right_of(const CircleSection& s, const Quad& p) {
  const Quad one(Rat(1));
  const bool lifted = !(p < one);
  const Quad base = lifted ? p - one : p;
  if (s.is_constant()) return s.pieces()[0];
  const auto& bp = s.breakpoints();
  auto it = std::upper_bound(bp.begin(), bp.end(), base);
  const std::size_t arc = it == bp.begin() ? bp.size() - 1 : static_cast<std::size_t>(it - bp.begin()) - 1;
  // Arc coordinate = base + wrap; lifted coordinate = base + (lifted ? 1 : 0).
  const Quad wrap = base < bp[arc] ? one : Quad();
  return shifted(s.pieces()[arc], wrap - (lifted ? one : Quad()));
}

const QuadPiece* arc_piece_at(const ArcSection& a, const Quad& p) {
  if (!(a.start <= p && p <= a.end)) return nullptr;
  const auto it = std::upper_bound(a.breakpoints.begin(), a.breakpoints.end(), p);
  return &a.pieces[static_cast<std::size_t>(it - a.breakpoints.begin())];
}

}  // namespace

ArcSection restrict(const CircleSection& s, const Quad& start, const Quad& end) {
  const Quad one(Rat(1));
  if (!in_unit_interval(start) || !(start < end) || one < end - start) {
    throw precondition_error("arc needs start in [0,1) and 0 < end - start <= 1");
  }
  ArcSection a{start, end, {}, {}};
  for (const Quad& shift : {Quad(), one}) {
    for (const Quad& b : s.breakpoints()) {
      const Quad p = b + shift;
      if (start < p && p < end) a.breakpoints.push_back(p);
    }
  }
  std::sort(a.breakpoints.begin(), a.breakpoints.end());
  std::vector<Quad> ends{start};
  ends.insert(ends.end(), a.breakpoints.begin(), a.breakpoints.end());
  ends.push_back(end);
  for (std::size_t i = 0; i + 1 < ends.size(); ++i) a.pieces.push_back(piece_right_of(s, midpoint(ends[i], ends[i + 1])));
  return a;
}

bool arc_section_valid(const ArcSection& a) {
  if (a.pieces.size() != a.breakpoints.size() + 1) return false;
  for (std::size_t i = 0; i < a.breakpoints.size(); ++i) {
    const Quad& b = a.breakpoints[i];
    if (a.pieces[i].at(b) != a.pieces[i + 1].at(b)) return false;
    if ((a.pieces[i + 1].slope - a.pieces[i].slope).sign() < 0) return false;
  }
  return true;
}

std::optional<CircleSection> glue(const std::vector<ArcSection>& arcs) {
  if (arcs.empty()) return std::nullopt;
  const Quad one(Rat(1));
  const auto reduce = [&](const Quad& p) { return p < one ? p : p - one; };
  std::vector<Quad> pts;
  for (const ArcSection& a : arcs) {
    pts.push_back(reduce(a.start));
    pts.push_back(reduce(a.end));
    for (const Quad& b : a.breakpoints) pts.push_back(reduce(b));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  CircleData d{pts, {}};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Quad u = pts[i];
    const Quad v = i + 1 < pts.size() ? pts[i + 1] : pts[0] + one;
    const Quad mid = midpoint(u, v);
    std::optional<QuadPiece> found;
    for (const ArcSection& a : arcs) {
      for (const Quad& k : {-one, Quad(), one}) {
        if (!(a.start <= u + k && v + k <= a.end)) continue;
        const QuadPiece* p = arc_piece_at(a, mid + k);
        const QuadPiece cell = shifted(*p, k);
        if (found && !(*found == cell)) return std::nullopt;
        found = cell;
      }
    }
    if (!found) return std::nullopt;
    d.pieces.push_back(*found);
  }
  if (pts.size() == 1) {
    // A single cut point: the one arc spans the full turn.
    if (!(d.pieces[0].slope == Quad())) return std::nullopt;
    return CircleSection::constant(d.pieces[0].intercept);
  }
  try {
    return CircleSection(std::move(d));
  } catch (const invariant_error&) {
    return std::nullopt;
  }
}

Germ germ(const CircleSection& s, const Quad& point) {
  const Quad one(Rat(1));
  if (!in_unit_interval(point)) throw precondition_error("circle point must lie in [0,1)");
  const QuadPiece right = piece_right_of(s, point);
  // Left of `point` is right of point - epsilon; shift into the lifted range.
  QuadPiece left = right;
  const auto& bp = s.breakpoints();
  const auto it = std::find(bp.begin(), bp.end(), point);
  if (it != bp.end()) {
    const std::size_t j = static_cast<std::size_t>(it - bp.begin());
    const std::size_t i = (j + bp.size() - 1) % bp.size();
    left = shifted(s.pieces()[i], i == bp.size() - 1 ? one : Quad());
  }
  return {s.eval(point), left, right, right.slope - left.slope};
}

KDefinedReport k_defined_check(const Quad& s0, const AffinePiece& left, const AffinePiece& right) {
  const Quad lhs = Quad(left.slope) * s0 + Quad(left.intercept);
  const Quad rhs = Quad(right.slope) * s0 + Quad(right.intercept);
  if (!(lhs == rhs)) throw precondition_error("pieces do not meet at s0");
  const Rat k = right.slope - left.slope;
  const bool rational = s0.is_rational();
  return {rational, k, rational ? k >= 0 : k == 0};
}

bool is_k_defined(const CircleSection& s) {
  for (const QuadPiece& p : s.pieces()) {
    if (!p.slope.is_rational() || !p.intercept.is_rational()) return false;
  }
  for (const Quad& b : s.breakpoints()) {
    const Quad k = s.kink(b);
    if (b.is_rational() ? k.sign() < 0 : !(k == Quad())) return false;
  }
  return true;
}

}  // namespace char1
