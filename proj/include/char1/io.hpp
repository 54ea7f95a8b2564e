#pragma once

/// JSON forms of every value type. All numbers travel as exact "p/q"
/// strings; key order is fixed so output is byte-stable.

#include <json.hpp>

#include "char1/congruence.hpp"
#include "char1/convex.hpp"
#include "char1/paf.hpp"
#include "char1/rational.hpp"
#include "char1/spectrum.hpp"
#include "char1/valuation.hpp"

namespace char1 {

using Json = nlohmann::ordered_json;

/// Parse failures and shape mismatches throw invariant_error.
Json parse_json(std::string_view text);

Json to_json(const Rat& q);
Rat rat_from_json(const Json& j);

Json to_json(const Paf& f);
Paf paf_from_json(const Json& j);

Json to_json(const Point& p);
Point point_from_json(const Json& j);
Json to_json(const Polygon& a);
Polygon polygon_from_json(const Json& j);
Json to_json(const Direction& d);
Direction direction_from_json(const Json& j);
Json to_json(const FracBody& x);
FracBody frac_from_json(const Json& j);

/// {"kind":"point","t":..} or {"kind":"dir","psi":[..]}; a direction
/// character takes its unit body from the caller.
Json to_json(const Character& phi);
Character character_from_json(const Json& j, const Polygon& unit = Polygon::unit_square());

Json to_json(const ClosedSet& k);
ClosedSet closed_set_from_json(const Json& j);

/// Quads serialize as {"a","b"}; a plain string is accepted as a rational.
Json to_json(const Quad& q);
Quad quad_from_json(const Json& j);
/// PAF layout with "cyclic": true and Quad-valued entries.
Json to_json(const CircleSection& s);
CircleSection circle_from_json(const Json& j);
/// Raw circle data without validation, for validity checks on untrusted input.
CircleData circle_data_from_json(const Json& j);

}  // namespace char1
