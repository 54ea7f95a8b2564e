#include <doctest.h>

#include <cmath>

#include "char1/convex.hpp"
#include "char1/error.hpp"
#include "char1/random.hpp"
#include "char1/semifield.hpp"
#include "oracles.hpp"

using namespace char1;

namespace {

Polygon seg_x() { return Polygon::segment({0, 0}, {1, 0}); }
Polygon seg_y() { return Polygon::segment({0, 0}, {0, 1}); }
Polygon unit01() { return Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
Polygon triangle() { return Polygon({{0, 0}, {2, 0}, {0, 1}}); }
Polygon cross_polytope() { return Polygon({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }

}  // namespace

TEST_CASE("hull union examples") {
  const Polygon h = hull_union(seg_x(), seg_y());
  CHECK(h == Polygon({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(oracle::is_hull_of(h, {{0, 0}, {1, 0}, {0, 0}, {0, 1}}));
  CHECK(hull_union(triangle(), triangle()) == triangle());
  CHECK(hull_union(Polygon::origin(), triangle()) == triangle());
}

TEST_CASE("minkowski examples") {
  const Polygon s = minkowski(seg_x(), seg_y());
  CHECK(s == unit01());
  CHECK(oracle::is_hull_of(s, oracle::pairwise_sums(seg_x(), seg_y())));
  CHECK(minkowski(triangle(), Polygon::origin()) == triangle());
  CHECK(minkowski(triangle(), triangle()) == dilate(2, triangle()));
}

TEST_CASE("support examples") {
  CHECK(support(unit01(), Direction(1, 1)) == 2);
  CHECK(support(Polygon::origin(), Direction(3, -2)) == 0);
  CHECK(support(seg_x(), Direction(0, 1)) == 0);
  CHECK(support(unit01(), Direction(1, 1)) == oracle::support(unit01().vertices(), 1, 1));
  CHECK_THROWS_AS(Direction(0, 0), invariant_error);
}

TEST_CASE("r-norm examples") {
  const Polygon e = Polygon::unit_square();
  CHECK(r_norm_body(triangle(), e) == 2);
  CHECK(r_norm_body(triangle(), e) == oracle::facet_ratio_norm(triangle(), e));
  CHECK(r_norm_body(e, e) == 1);
  CHECK(r_norm_body(Polygon::origin(), e) == 0);
  CHECK(gauge({2, 0}, e) == 2);
}

TEST_CASE("polar duality") {
  const Polygon e = Polygon::unit_square();
  CHECK(polar(e) == cross_polytope());
  CHECK(polar(polar(e)) == e);
  CHECK(polar(cross_polytope()) == e);
  CHECK(polar(e) == Polygon::hull(oracle::facet_duals(e)));
  CHECK_THROWS_AS(polar(triangle()), precondition_error);
}

TEST_CASE("normalized support characters") {
  const Polygon e = Polygon::unit_square();
  CHECK(char_eval(Direction(1, 0), unit01(), e) == 1);
  CHECK(char_eval(Direction(3, 5), e, e) == 1);
  CHECK(char_eval(Direction(3, 5), Polygon::origin(), e) == 0);
}

TEST_CASE("fraction bodies") {
  const Polygon a = triangle();
  const Polygon c = unit01();
  const FracBody x{a, Polygon::origin()};
  CHECK(frac_equal(x, FracBody{minkowski(a, c), c}));
  CHECK(frac_equal(frac_oplus(x, x), x));
  const FracBody s1{seg_x(), Polygon::origin()};
  const FracBody s2{seg_y(), Polygon::origin()};
  const FracBody m = frac_oplus(s1, s2);
  CHECK(frac_equal(m, FracBody{Polygon({{0, 0}, {1, 0}, {0, 1}}), Polygon::origin()}));
  // Pointwise max of support functions on 100 directions.
  for (int k = 0; k < 100; ++k) {
    const Direction psi(k - 50, 37 - k);
    const Rat l1 = oracle::support(seg_x().vertices(), psi.p(), psi.q());
    const Rat l2 = oracle::support(seg_y().vertices(), psi.p(), psi.q());
    REQUIRE(frac_support(m, psi) == (l1 < l2 ? l2 : l1));
  }
}

TEST_CASE("i-invariance") {
  CHECK(i_invariant(Polygon::unit_square()));
  CHECK_FALSE(i_invariant(triangle()));
  CHECK(i_symmetrize(seg_x()) == cross_polytope());
  std::vector<Point> rotated;
  const Polygon s = seg_x();
  for (const Point& p : s.vertices()) {
    rotated.push_back(p);
    rotated.push_back({-p.y, p.x});
    rotated.push_back({-p.x, -p.y});
    rotated.push_back({p.y, -p.x});
  }
  CHECK(oracle::is_hull_of(i_symmetrize(seg_x()), rotated));
}

TEST_CASE("polygon construction validates vertices") {
  CHECK_THROWS_AS(Polygon({{0, 0}, {1, 0}, {2, 0}}), invariant_error);
  CHECK_THROWS_AS(Polygon({{0, 0}, {2, 0}, {1, 1}, {1, Rat(1, 2)}}), invariant_error);
  CHECK_THROWS_AS(Polygon(std::vector<Point>{}), invariant_error);
  // Vertex order does not matter.
  CHECK(Polygon({{0, 1}, {2, 0}, {0, 0}}) == triangle());
}

TEST_CASE("random polygon operations match the brute-force oracles") {
  Gen g(77);
  for (int i = 0; i < 300; ++i) {
    const Polygon a = g.polygon();
    const Polygon b = g.polygon();
    REQUIRE(oracle::is_hull_of(minkowski(a, b), oracle::pairwise_sums(a, b)));
    std::vector<Point> both = a.vertices();
    both.insert(both.end(), b.vertices().begin(), b.vertices().end());
    REQUIRE(oracle::is_hull_of(hull_union(a, b), both));
    const Polygon e = g.unit_body();
    const Polygon o = g.polygon_with_origin();
    REQUIRE(r_norm_body(o, e) == oracle::facet_ratio_norm(o, e));
    REQUIRE(polar(e) == Polygon::hull(oracle::facet_duals(e)));
    const Direction psi = g.direction();
    REQUIRE(support(a, psi) == oracle::support(a.vertices(), psi.p(), psi.q()));
  }
}

TEST_CASE("euclidean mode against the vertex-norm brute force") {
  Gen g(5);
  for (int i = 0; i < 200; ++i) {
    const Polygon a = g.polygon();
    double best = 0;
    for (const Point& v : a.vertices()) best = std::max(best, std::hypot(v.x.get_d(), v.y.get_d()));
    REQUIRE(std::abs(euclidean_r(a) - best) <= 1e-9);
    REQUIRE(std::abs(euclidean_dual_norm(a) - best) <= 1e-9);
  }
}

TEST_CASE("fraction model unit and norms") {
  const FracBodyModel m;
  CHECK(r_norm(m, m.unit()) == 1);
  CHECK(r_norm(m, m.zero()) == 0);
  const FracBody x{triangle(), Polygon::origin()};
  CHECK(r_norm(m, x) == r_norm_body(triangle(), Polygon::unit_square()));
}
