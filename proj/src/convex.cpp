#include "char1/convex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "char1/error.hpp"
#include "char1/io.hpp"

namespace char1 {

namespace {

// Andrew's monotone chain on exact points. Collinear points are dropped, so
// the result is the exact vertex set in CCW order from the lexicographic min.
std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

// Outward facet inequalities n.x <= c of a polygon with the origin strictly
// inside (so every c > 0).
struct Facet {
  Point normal;
  Rat offset;
};

std::vector<Facet> facets(const Polygon& unit) {
  if (!unit.origin_interior()) {
    throw precondition_error("unit body must be full-dimensional with the origin strictly inside");
  }
  const auto& v = unit.vertices();
  std::vector<Facet> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    Point n{b.y - a.y, a.x - b.x};
    Rat c = dot(n, a);
    out.push_back({std::move(n), std::move(c)});
  }
  return out;
}

Polygon scaled(const Rat& q, const Polygon& a) {
  std::vector<Point> pts;
  pts.reserve(a.vertices().size());
  for (const Point& p : a.vertices()) pts.push_back({q * p.x, q * p.y});
  return Polygon::hull(std::move(pts));
}

}  // namespace

Direction::Direction(Rat p, Rat q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == 0 && q_ == 0) throw invariant_error("direction must be nonzero");
}

Polygon::Polygon(std::vector<Point> vertices) {
  if (vertices.empty()) throw invariant_error("polygon needs at least one vertex");
  std::vector<Point> h = convex_hull(vertices);
  std::vector<Point> given = vertices;
  std::sort(given.begin(), given.end());
  std::vector<Point> sorted_hull = h;
  std::sort(sorted_hull.begin(), sorted_hull.end());
  if (given != sorted_hull) {
    throw invariant_error("polygon vertex list is not the exact vertex set of its hull");
  }
  vertices_ = std::move(h);
}

Polygon Polygon::hull(std::vector<Point> points) {
  if (points.empty()) throw invariant_error("hull of an empty point set");
  return Polygon(Canonical{}, convex_hull(std::move(points)));
}

Polygon Polygon::origin() { return Polygon(Canonical{}, {Point{0, 0}}); }

Polygon Polygon::segment(const Point& a, const Point& b) { return hull({a, b}); }

Polygon Polygon::square(const Rat& h) {
  if (h <= 0) throw precondition_error("square half-side must be positive");
  return hull({{-h, -h}, {h, -h}, {h, h}, {-h, h}});
}

int Polygon::dimension() const {
  return vertices_.size() >= 3 ? 2 : static_cast<int>(vertices_.size()) - 1;
}

bool Polygon::contains(const Point& v) const {
  const auto& p = vertices_;
  switch (dimension()) {
    case 0:
      return p[0] == v;
    case 1:
      return cross(p[0], p[1], v) == 0 && min_rat(p[0].x, p[1].x) <= v.x && v.x <= max_rat(p[0].x, p[1].x) &&
             min_rat(p[0].y, p[1].y) <= v.y && v.y <= max_rat(p[0].y, p[1].y);
    default:
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (cross(p[i], p[(i + 1) % p.size()], v) < 0) return false;
      }
      return true;
  }
}

bool Polygon::origin_interior() const {
  if (dimension() < 2) return false;
  const Point o{0, 0};
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (cross(vertices_[i], vertices_[(i + 1) % vertices_.size()], o) <= 0) return false;
  }
  return true;
}

Polygon hull_union(const Polygon& a, const Polygon& b) {
  std::vector<Point> pts = a.vertices();
  pts.insert(pts.end(), b.vertices().begin(), b.vertices().end());
  return Polygon::hull(std::move(pts));
}

namespace {

// Boundary edges in CCW order from the lexicographic minimum (a segment
// contributes both directions, a point none).
std::vector<Point> edges(const Polygon& a) {
  const auto& v = a.vertices();
  std::vector<Point> e;
  if (v.size() < 2) return e;
  for (std::size_t i = 0; i < v.size(); ++i) e.push_back(v[(i + 1) % v.size()] - v[i]);
  return e;
}

// Angle order on (-90, 270] degrees, which is the order edges leave the
// lexicographic minimum.
bool edge_before(const Point& d, const Point& e) {
  const auto half = [](const Point& p) { return p.x > 0 || (p.x == 0 && p.y > 0) ? 0 : 1; };
  const int hd = half(d);
  const int he = half(e);
  if (hd != he) return hd < he;
  return d.x * e.y - d.y * e.x > 0;
}

}  // namespace

// Edge merge: the sum's boundary is the angle-sorted union of both edge lists.
// Parallel edges are folded, so the walk is already the canonical vertex list.
Polygon minkowski(const Polygon& a, const Polygon& b) {
  const std::vector<Point> ea = edges(a);
  const std::vector<Point> eb = edges(b);
  std::vector<Point> merged;
  merged.reserve(ea.size() + eb.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i + j < ea.size() + eb.size()) {
    const bool take_a = j == eb.size() || (i < ea.size() && !edge_before(eb[j], ea[i]));
    const Point& e = take_a ? ea[i++] : eb[j++];
    if (!merged.empty() && !edge_before(merged.back(), e) && !edge_before(e, merged.back())) {
      merged.back() = merged.back() + e;
    } else {
      merged.push_back(e);
    }
  }
  std::vector<Point> pts{a.vertices().front() + b.vertices().front()};
  for (std::size_t k = 0; k + 1 < merged.size(); ++k) pts.push_back(pts.back() + merged[k]);
  return Polygon(Polygon::Canonical{}, std::move(pts));
}

Polygon dilate(const Rat& q, const Polygon& a) {
  if (q < 0) throw precondition_error("dilation factor must be nonnegative");
  return scaled(q, a);
}

Rat support(const Polygon& a, const Direction& psi) {
  Rat best = psi(a.vertices().front());
  for (const Point& v : a.vertices()) best = max_rat(best, psi(v));
  return best;
}

Rat gauge(const Point& v, const Polygon& unit) {
  Rat best = 0;
  for (const Facet& f : facets(unit)) best = max_rat(best, dot(f.normal, v) / f.offset);
  return best;
}

Rat r_norm_body(const Polygon& a, const Polygon& unit) {
  const std::vector<Facet> fs = facets(unit);
  Rat best = 0;
  for (const Point& v : a.vertices()) {
    for (const Facet& f : fs) best = max_rat(best, dot(f.normal, v) / f.offset);
  }
  return best;
}

Polygon polar(const Polygon& unit) {
  std::vector<Point> pts;
  for (const Facet& f : facets(unit)) pts.push_back({f.normal.x / f.offset, f.normal.y / f.offset});
  return Polygon::hull(std::move(pts));
}

bool frac_equal(const FracBody& x, const FracBody& y) {
  return minkowski(x.pos, y.neg) == minkowski(y.pos, x.neg);
}

FracBody frac_oplus(const FracBody& x, const FracBody& y) {
  return {hull_union(minkowski(x.pos, y.neg), minkowski(y.pos, x.neg)), minkowski(x.neg, y.neg)};
}

FracBody frac_plus(const FracBody& x, const FracBody& y) {
  return {minkowski(x.pos, y.pos), minkowski(x.neg, y.neg)};
}

FracBody frac_neg(const FracBody& x) { return {x.neg, x.pos}; }

FracBody frac_scale(const Rat& q, const FracBody& x) {
  if (q < 0) return {scaled(-q, x.neg), scaled(-q, x.pos)};
  return {scaled(q, x.pos), scaled(q, x.neg)};
}

Rat frac_support(const FracBody& x, const Direction& psi) { return support(x.pos, psi) - support(x.neg, psi); }

std::vector<Direction> frac_norm_candidates(const FracBody& x, const Polygon& unit) {
  std::vector<Direction> raw;
  const Polygon dual = polar(unit);
  for (const Point& v : dual.vertices()) raw.emplace_back(v.x, v.y);
  for (const Polygon* part : {&x.pos, &x.neg}) {
    const auto& v = part->vertices();
    if (v.size() < 2) continue;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Point e = v[(i + 1) % v.size()] - v[i];
      raw.emplace_back(e.y, -e.x);
      raw.emplace_back(-e.y, e.x);
    }
  }
  std::vector<Direction> out;
  out.reserve(raw.size());
  for (const Direction& d : raw) {
    const Rat s = support(unit, d);
    out.emplace_back(d.p() / s, d.q() / s);
  }
  return out;
}

Rat r_norm_frac(const FracBody& x, const Polygon& unit) {
  Rat best = 0;
  for (const Direction& d : frac_norm_candidates(x, unit)) best = max_rat(best, abs_rat(frac_support(x, d)));
  return best;
}

Rat char_eval(const Direction& psi, const Polygon& a, const Polygon& unit) {
  const Rat s = support(unit, psi);
  if (s <= 0) throw precondition_error("unit body has zero support in this direction");
  return support(a, psi) / s;
}

Rat char_eval(const Direction& psi, const FracBody& x, const Polygon& unit) {
  const Rat s = support(unit, psi);
  if (s <= 0) throw precondition_error("unit body has zero support in this direction");
  return frac_support(x, psi) / s;
}

Polygon rotate_i(const Polygon& a) {
  std::vector<Point> pts;
  pts.reserve(a.vertices().size());
  for (const Point& p : a.vertices()) pts.push_back({-p.y, p.x});
  return Polygon::hull(std::move(pts));
}

bool i_invariant(const Polygon& a) { return rotate_i(a) == a; }

Polygon i_symmetrize(const Polygon& a) {
  const Polygon a1 = rotate_i(a);
  const Polygon a2 = rotate_i(a1);
  const Polygon a3 = rotate_i(a2);
  return hull_union(hull_union(a, a1), hull_union(a2, a3));
}

double euclidean_r(const Polygon& a) {
  double best = 0;
  for (const Point& v : a.vertices()) best = std::max(best, std::hypot(v.x.get_d(), v.y.get_d()));
  return best;
}

double euclidean_dual_norm(const Polygon& a, std::size_t angular_samples) {
  const auto support_at = [&](double ux, double uy) {
    double s = -INFINITY;
    for (const Point& v : a.vertices()) s = std::max(s, ux * v.x.get_d() + uy * v.y.get_d());
    return s;
  };
  double best = 0;
  for (const Point& v : a.vertices()) {
    const double n = std::hypot(v.x.get_d(), v.y.get_d());
    if (n > 0) best = std::max(best, support_at(v.x.get_d() / n, v.y.get_d() / n));
  }
  for (std::size_t k = 0; k < angular_samples; ++k) {
    const double th = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(angular_samples);
    best = std::max(best, support_at(std::cos(th), std::sin(th)));
  }
  return best;
}

FracBodyModel::FracBodyModel(Polygon unit) : unit_(std::move(unit)) {
  if (!unit_.origin_interior()) {
    throw precondition_error("unit body must be full-dimensional with the origin strictly inside");
  }
}

FracBody FracBodyModel::div_by_nat(const FracBody& x, std::size_t n) const {
  if (n == 0) throw precondition_error("division by zero");
  return frac_scale(Rat(1, static_cast<unsigned long>(n)), x);
}

std::string FracBodyModel::describe(const FracBody& x) const { return to_json(x).dump(); }

}  // namespace char1
