#pragma once

// JSON documents for geometry values and reports.
//
// Point sets and polytopes: {"dim": n, "points": [["3/2", "-4"], ...]}.
// Virtual polytopes:        {"dim": n, "plus": [...], "minus": [...]}.
// Rationals are always strings, so documents round-trip exactly.

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "mixvol/geometry.hpp"
#include "mixvol/mixed_volume.hpp"
#include "mixvol/newton_bkk.hpp"

namespace mixvol {

using json = nlohmann::json;

/// Parses text as JSON; syntax errors become ParseError naming `source`.
json parse_json(std::string_view text, std::string_view source);

json to_json(const Rational& q);
json to_json(const PointSet& a);
json to_json(const Polytope& p);
json to_json(const VirtualPolytope& v);
/// Decimals are rendered fixed-point with `digits` digits after the point.
json to_json(const InequalityReport& r, int digits);
/// Subset indices are 1-based.
json to_json(const DependenceWitness& w);
json to_json(const RootCount& c);

Rational rational_from_json(const json& j);
PointSet point_set_from_json(const json& j);
/// Convex hull of the listed points.
Polytope polytope_from_json(const json& j);
/// Accepts a virtual document or a plain polytope (minus part zero).
VirtualPolytope virtual_from_json(const json& j);

}  // namespace mixvol
