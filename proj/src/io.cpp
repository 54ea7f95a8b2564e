#include "char1/io.hpp"

#include <string>

#include "char1/error.hpp"

namespace char1 {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw invariant_error(std::string("expected an object with key '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw invariant_error(std::string("missing key '") + key + "'");
  return *it;
}

const Json& array_of(const Json& j, const char* what) {
  if (!j.is_array()) throw invariant_error(std::string(what) + " must be an array");
  return j;
}

Json rat_pair(const Rat& a, const Rat& b) { return Json::array({to_json(a), to_json(b)}); }

std::pair<Rat, Rat> rat_pair_from(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) throw invariant_error(std::string(what) + " must be a pair");
  return {rat_from_json(j[0]), rat_from_json(j[1])};
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw invariant_error(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const Rat& q) { return to_string(q); }

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) throw invariant_error("rationals must be \"p/q\" strings, got " + j.dump());
  return parse_rat(j.get<std::string>());
}

// -- PAF ---------------------------------------------------------------------

Json to_json(const Paf& f) {
  Json out;
  out["domain"] = rat_pair(f.lo(), f.hi());
  Json bp = Json::array();
  for (const Rat& t : f.breakpoints()) bp.push_back(to_json(t));
  out["breakpoints"] = bp;
  Json pieces = Json::array();
  for (const AffinePiece& p : f.pieces()) pieces.push_back({{"a", to_json(p.slope)}, {"b", to_json(p.intercept)}});
  out["pieces"] = pieces;
  return out;
}

Paf paf_from_json(const Json& j) {
  const auto [lo, hi] = rat_pair_from(field(j, "domain"), "domain");
  std::vector<Rat> bp;
  for (const Json& t : array_of(field(j, "breakpoints"), "breakpoints")) bp.push_back(rat_from_json(t));
  std::vector<AffinePiece> pieces;
  for (const Json& p : array_of(field(j, "pieces"), "pieces")) {
    pieces.push_back({rat_from_json(field(p, "a")), rat_from_json(field(p, "b"))});
  }
  if (bp.empty() || bp.front() != lo || bp.back() != hi) {
    throw invariant_error("breakpoints must start and end at the domain ends");
  }
  return Paf(std::move(bp), std::move(pieces));
}

// -- convex ------------------------------------------------------------------

Json to_json(const Point& p) { return rat_pair(p.x, p.y); }

Point point_from_json(const Json& j) {
  const auto [x, y] = rat_pair_from(j, "point");
  return {x, y};
}

Json to_json(const Polygon& a) {
  Json vs = Json::array();
  for (const Point& v : a.vertices()) vs.push_back(to_json(v));
  return {{"vertices", vs}};
}

Polygon polygon_from_json(const Json& j) {
  std::vector<Point> vs;
  for (const Json& v : array_of(field(j, "vertices"), "vertices")) vs.push_back(point_from_json(v));
  if (vs.empty()) throw invariant_error("polygon needs at least one vertex");
  return Polygon(std::move(vs));
}

Json to_json(const Direction& d) { return rat_pair(d.p(), d.q()); }

Direction direction_from_json(const Json& j) {
  const auto [p, q] = rat_pair_from(j, "direction");
  return {p, q};
}

Json to_json(const FracBody& x) { return {{"pos", to_json(x.pos)}, {"neg", to_json(x.neg)}}; }

FracBody frac_from_json(const Json& j) {
  return {polygon_from_json(field(j, "pos")), polygon_from_json(field(j, "neg"))};
}

// -- characters ----------------------------------------------------------------

Json to_json(const Character& phi) {
  if (const auto* p = std::get_if<PointEval>(&phi)) return {{"kind", "point"}, {"t", to_json(p->t)}};
  const auto& d = std::get<SupportDir>(phi);
  return {{"kind", "dir"}, {"psi", to_json(d.psi)}};
}

Character character_from_json(const Json& j, const Polygon& unit) {
  const Json& kind = field(j, "kind");
  if (kind == "point") return PointEval{rat_from_json(field(j, "t"))};
  if (kind == "dir") return SupportDir{direction_from_json(field(j, "psi")), unit};
  throw invariant_error("character kind must be \"point\" or \"dir\"");
}

// -- closed sets -------------------------------------------------------------

Json to_json(const ClosedSet& k) {
  Json ivs = Json::array();
  for (const Interval& iv : k.intervals()) ivs.push_back(rat_pair(iv.a, iv.b));
  return {{"intervals", ivs}};
}

ClosedSet closed_set_from_json(const Json& j) {
  std::vector<Interval> ivs;
  for (const Json& iv : array_of(field(j, "intervals"), "intervals")) {
    const auto [a, b] = rat_pair_from(iv, "interval");
    ivs.push_back({a, b});
  }
  return ClosedSet(std::move(ivs));
}

// -- circle --------------------------------------------------------------------

Json to_json(const Quad& q) { return {{"a", to_json(q.a())}, {"b", to_json(q.b())}}; }

Quad quad_from_json(const Json& j) {
  if (j.is_string()) return Quad(rat_from_json(j));
  return {rat_from_json(field(j, "a")), rat_from_json(field(j, "b"))};
}

Json to_json(const CircleSection& s) {
  Json out;
  out["cyclic"] = true;
  Json bp = Json::array();
  for (const Quad& b : s.breakpoints()) bp.push_back(to_json(b));
  out["breakpoints"] = bp;
  Json pieces = Json::array();
  for (const QuadPiece& p : s.pieces()) pieces.push_back({{"a", to_json(p.slope)}, {"b", to_json(p.intercept)}});
  out["pieces"] = pieces;
  return out;
}

CircleData circle_data_from_json(const Json& j) {
  const Json& cyclic = field(j, "cyclic");
  if (cyclic != true) throw invariant_error("circle sections need \"cyclic\": true");
  CircleData d;
  for (const Json& b : array_of(field(j, "breakpoints"), "breakpoints")) d.breakpoints.push_back(quad_from_json(b));
  for (const Json& p : array_of(field(j, "pieces"), "pieces")) {
    d.pieces.push_back({quad_from_json(field(p, "a")), quad_from_json(field(p, "b"))});
  }
  return d;
}

CircleSection circle_from_json(const Json& j) { return CircleSection(circle_data_from_json(j)); }

}  // namespace char1
