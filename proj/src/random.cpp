#include "char1/random.hpp"

#include <algorithm>

namespace char1 {

long Gen::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }

Rat Gen::rat(long num_bound, long den_bound) {
  return make_rat(integer(-num_bound, num_bound), integer(1, den_bound));
}

Rat Gen::positive_rat() { return make_rat(integer(1, 8), integer(1, 4)); }

Rat Gen::point_in(const Rat& lo, const Rat& hi) {
  const long d = integer(1, 8);
  return lo + (hi - lo) * make_rat(integer(0, d), d);
}

Rat Gen::interior_point(const Rat& lo, const Rat& hi) {
  const long d = integer(2, 8);
  return lo + (hi - lo) * make_rat(integer(1, d - 1), d);
}

Paf Gen::paf(const Rat& lo, const Rat& hi, int max_interior) {
  std::vector<Rat> ts{lo, hi};
  const long m = integer(0, max_interior);
  for (long i = 0; i < m; ++i) ts.push_back(interior_point(lo, hi));
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<Rat> values;
  for (std::size_t i = 0; i < ts.size(); ++i) values.push_back(rat());
  return Paf::interpolate(ts, values);
}

Paf Gen::convex_paf(const Rat& lo, const Rat& hi) {
  Paf f = Paf::affine(lo, hi, rat(), rat());
  const long m = integer(0, 3);
  for (long i = 0; i < m; ++i) f = oplus(f, Paf::affine(lo, hi, rat(), rat()));
  return f;
}

Paf Gen::anchored_paf() {
  const Paf f = paf(0, 1);
  return plus(f, Paf::constant(0, 1, -f.eval(0)));
}

Paf Gen::nonzero_paf(const Rat& lo, const Rat& hi) {
  Paf f = paf(lo, hi);
  if (f == Paf::constant(lo, hi, 0)) f = Paf::affine(lo, hi, 1, 0);
  return f;
}

Point Gen::point(long bound) { return {rat(bound, 2), rat(bound, 2)}; }

Polygon Gen::polygon() {
  std::vector<Point> pts;
  const long m = integer(1, 6);
  for (long i = 0; i < m; ++i) pts.push_back(point());
  return Polygon::hull(std::move(pts));
}

Polygon Gen::polygon_with_origin() {
  std::vector<Point> pts{{0, 0}};
  const long m = integer(0, 5);
  for (long i = 0; i < m; ++i) pts.push_back(point());
  return Polygon::hull(std::move(pts));
}

Polygon Gen::unit_body() {
  if (integer(0, 3) == 0) return Polygon::square(positive_rat());
  // One point per open quadrant keeps the origin strictly inside.
  std::vector<Point> pts;
  static const std::pair<int, int> kQuadrants[] = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
  for (const auto& [sx, sy] : kQuadrants) {
    pts.push_back({positive_rat() * sx, positive_rat() * sy});
  }
  const long extra = integer(0, 2);
  for (long i = 0; i < extra; ++i) pts.push_back(point());
  return Polygon::hull(std::move(pts));
}

Direction Gen::direction() {
  for (;;) {
    Rat p = rat(4, 3);
    Rat q = rat(4, 3);
    if (p != 0 || q != 0) return {p, q};
  }
}

FracBody Gen::frac_body() { return {polygon_with_origin(), polygon_with_origin()}; }

ClosedSet Gen::closed_set(const Rat& lo, const Rat& hi) {
  std::vector<Interval> ivs;
  const long m = integer(0, 3);
  for (long i = 0; i < m; ++i) {
    Rat a = point_in(lo, hi);
    Rat b = coin() ? a : point_in(lo, hi);
    if (b < a) std::swap(a, b);
    ivs.push_back({a, b});
  }
  return ClosedSet(std::move(ivs));
}

ClosedSet Gen::nonempty_closed_set(const Rat& lo, const Rat& hi) {
  for (;;) {
    ClosedSet k = closed_set(lo, hi);
    if (!k.empty()) return k;
  }
}

Quad Gen::irrational_point() {
  static const long kQ[] = {1, 2, 3, 4};
  const Rat q = make_rat(coin() ? 1 : -1, kQ[integer(0, 3)]);
  const Quad u(0, q);
  const long k = integer(0, 9);
  const Rat p = rational_between(Quad(make_rat(k, 10)) - u, Quad(make_rat(k + 1, 10)) - u);
  return {p, q};
}

Quad Gen::circle_point() {
  if (coin()) return irrational_point();
  const long d = integer(1, 12);
  return Quad(make_rat(integer(0, d - 1), d));
}

}  // namespace char1
