#include "mixvol/io.hpp"

#include "mixvol/error.hpp"

namespace mixvol {

json parse_json(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(std::string(source) + ": malformed JSON", line, column);
  }
}

json to_json(const Rational& q) { return to_string(q); }

namespace {

template <typename Vec>
json points_to_json(const std::vector<Vec>& points) {
  json out = json::array();
  for (const auto& p : points) {
    json row = json::array();
    for (const auto& x : p) row.push_back(x.get_str());
    out.push_back(std::move(row));
  }
  return out;
}

json number_to_json(const Number& n, int digits) {
  if (const auto* q = std::get_if<Rational>(&n)) return to_json(*q);
  return std::get<Decimal>(n).to_fixed(digits);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

int dim_of(const json& j) {
  const json& d = field(j, "dim");
  if (!d.is_number_integer()) throw DomainError("field 'dim' must be an integer");
  const auto dim = d.get<long long>();
  if (dim < 1) throw DomainError("field 'dim' must be positive");
  if (dim > kMaxDimension) {
    throw CapabilityError("ambient dimension " + std::to_string(dim) +
                          " exceeds the supported maximum");
  }
  return static_cast<int>(dim);
}

std::vector<RationalVector> rational_points(const json& pts, int dim, const char* key) {
  if (!pts.is_array() || pts.empty()) {
    throw DomainError(std::string("field '") + key + "' must be a nonempty list");
  }
  std::vector<RationalVector> out;
  for (const auto& row : pts) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
      throw DomainError(std::string("every point in '") + key + "' needs " +
                        std::to_string(dim) + " coordinates");
    }
    RationalVector p;
    for (const auto& x : row) p.push_back(rational_from_json(x));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

json to_json(const PointSet& a) {
  return {{"dim", a.ambient_dim()}, {"points", points_to_json(a.points())}};
}

json to_json(const Polytope& p) {
  return {{"dim", p.ambient_dim()}, {"points", points_to_json(p.vertices())}};
}

json to_json(const VirtualPolytope& v) {
  return {{"dim", v.ambient_dim()},
          {"plus", points_to_json(v.plus().vertices())},
          {"minus", points_to_json(v.minus().vertices())}};
}

json to_json(const InequalityReport& r, int digits) {
  return {{"holds", r.holds},
          {"exact", r.exact},
          {"lhs", number_to_json(r.lhs, digits)},
          {"rhs", number_to_json(r.rhs, digits)},
          {"margin", number_to_json(r.margin, digits)}};
}

json to_json(const DependenceWitness& w) {
  json subset = json::array();
  for (std::size_t i : w.subset) subset.push_back(i + 1);
  return {{"dependent", w.dependent}, {"subset", subset}};
}

json to_json(const RootCount& c) {
  return {{"value", c.value.get_str()}, {"method", to_string(c.method)}};
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  throw DomainError("coordinates must be integers or rational strings, got " + j.dump());
}

PointSet point_set_from_json(const json& j) {
  const int dim = dim_of(j);
  std::vector<IntegerVector> pts;
  for (const auto& p : rational_points(field(j, "points"), dim, "points")) {
    if (!is_integral(p)) throw DomainError("point sets must have integer coordinates");
    IntegerVector v;
    for (const auto& x : p) v.push_back(x.get_num());
    pts.push_back(std::move(v));
  }
  return PointSet(dim, std::move(pts));
}

Polytope polytope_from_json(const json& j) {
  const int dim = dim_of(j);
  const auto pts = rational_points(field(j, "points"), dim, "points");
  return convex_hull(pts, dim);
}

VirtualPolytope virtual_from_json(const json& j) {
  if (j.is_object() && j.contains("points")) return VirtualPolytope(polytope_from_json(j));
  const int dim = dim_of(j);
  const auto plus = rational_points(field(j, "plus"), dim, "plus");
  const auto minus = rational_points(field(j, "minus"), dim, "minus");
  return VirtualPolytope(convex_hull(plus, dim), convex_hull(minus, dim));
}

}  // namespace mixvol
