#include <doctest.h>

#include "char1/error.hpp"
#include "char1/io.hpp"
#include "char1/random.hpp"

using namespace char1;

namespace {

// parse(serialize(x)) == x, also through the text form.
template <typename T, typename From>
bool round_trips(const T& x, From from) {
  const Json j = to_json(x);
  return from(j) == x && from(parse_json(j.dump())) == x;
}

}  // namespace

TEST_CASE("rational text") {
  CHECK(rat_from_json(Json("-6/4")) == Rat(-3, 2));
  CHECK(to_json(Rat(-3, 2)) == Json("-3/2"));
  CHECK(to_json(Rat(4)) == Json("4"));
  CHECK_THROWS_AS(rat_from_json(Json("1/0")), invariant_error);
  CHECK_THROWS_AS(rat_from_json(Json("x")), invariant_error);
  CHECK_THROWS_AS(rat_from_json(Json(0.5)), invariant_error);
}

TEST_CASE("schema violations") {
  CHECK_THROWS_AS(parse_json("{"), invariant_error);
  CHECK_THROWS_AS(paf_from_json(parse_json(R"({"domain":["0","1"],"breakpoints":["0","1"]})")), invariant_error);
  CHECK_THROWS_AS(
      paf_from_json(parse_json(R"({"domain":["0","1"],"breakpoints":["0","2"],"pieces":[{"a":"1","b":"0"}]})")),
      invariant_error);
  CHECK_THROWS_AS(polygon_from_json(parse_json(R"({"vertices":[]})")), invariant_error);
  CHECK_THROWS_AS(circle_data_from_json(parse_json(R"({"breakpoints":[],"pieces":[]})")), invariant_error);
}

TEST_CASE("quad serialization") {
  CHECK(to_json(Quad(Rat(1, 2), -1)).dump() == R"({"a":"1/2","b":"-1"})");
  CHECK(quad_from_json(Json("3/4")) == Quad(Rat(3, 4)));
}

TEST_CASE("fuzzed JSON round trips") {
  Gen g(424242);
  for (int i = 0; i < 500; ++i) {
    REQUIRE(round_trips(g.rat(1000, 97), rat_from_json));
    const Rat lo = g.rat();
    REQUIRE(round_trips(g.paf(lo, lo + g.positive_rat()), paf_from_json));
    REQUIRE(round_trips(g.point(), point_from_json));
    REQUIRE(round_trips(g.polygon(), polygon_from_json));
    REQUIRE(round_trips(g.direction(), direction_from_json));
    REQUIRE(round_trips(g.closed_set(0, 1), closed_set_from_json));
    REQUIRE(round_trips(g.circle_point(), quad_from_json));
    const FracBody x = g.frac_body();
    const FracBody y = frac_from_json(parse_json(to_json(x).dump()));
    REQUIRE(y.pos == x.pos);
    REQUIRE(y.neg == x.neg);
    const Polygon e = g.unit_body();
    const Character phi = g.coin() ? Character(PointEval{g.point_in(0, 1)}) : Character(SupportDir{g.direction(), e});
    REQUIRE(character_from_json(parse_json(to_json(phi).dump()), e) == phi);
    const std::vector<Quad> pts{Quad(0), g.irrational_point()};
    const CircleSection s = CircleSection::interpolate(pts, {Quad(g.rat()), Quad(g.rat())});
    REQUIRE(circle_from_json(parse_json(to_json(s).dump())) == s);
  }
}
