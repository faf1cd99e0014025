#include <gtest/gtest.h>

#include "generators.hpp"
#include "mixvol/error.hpp"
#include "mixvol/io.hpp"

namespace mixvol {
namespace {

using testing::Rng;

TEST(Json, Rationals) {
  EXPECT_EQ(to_json(ratio(-3, 2)), json("-3/2"));
  EXPECT_EQ(to_json(Rational(4)), json("4"));
  EXPECT_EQ(rational_from_json(json("6/4")), ratio(3, 2));
  EXPECT_EQ(rational_from_json(json(-7)), Rational(-7));
  EXPECT_THROW(rational_from_json(json("1/0")), DomainError);
  EXPECT_THROW(rational_from_json(json("abc")), DomainError);
  EXPECT_THROW(rational_from_json(json(1.5)), DomainError);
}

TEST(Json, PolytopeDocument) {
  const json j = to_json(cube(2));
  EXPECT_EQ(j.at("dim"), 2);
  EXPECT_EQ(j.at("points"), json::parse(R"([["0","0"],["0","1"],["1","0"],["1","1"]])"));
}

TEST(Json, PolytopeFromPointsTakesHull) {
  const json j = json::parse(R"({"dim": 2, "points": [[0,0],[2,0],[0,2],["1/2","1/2"]]})");
  EXPECT_EQ(polytope_from_json(j), standard_simplex(2, 2));
}

TEST(Json, Errors) {
  EXPECT_THROW(polytope_from_json(json::parse(R"({"points": [[0]]})")), DomainError);
  EXPECT_THROW(polytope_from_json(json::parse(R"({"dim": 2, "points": [[0]]})")), DomainError);
  EXPECT_THROW(polytope_from_json(json::parse(R"({"dim": 0, "points": [[]]})")), DomainError);
  EXPECT_THROW(polytope_from_json(json::parse(R"({"dim": 7, "points": [[0,0,0,0,0,0,0]]})")),
               CapabilityError);
  EXPECT_THROW(point_set_from_json(json::parse(R"({"dim": 1, "points": [["1/2"]]})")),
               DomainError);
  EXPECT_THROW(point_set_from_json(json::parse(R"({"dim": 1, "points": []})")), DomainError);
}

TEST(Json, MalformedTextHasPosition) {
  try {
    parse_json("{\n  \"dim\": 2,\n  oops\n}", "input.json");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("input.json"), std::string::npos);
  }
}

TEST(Json, Reports) {
  EXPECT_EQ(to_json(DependenceWitness{true, {0, 2}}),
            json::parse(R"({"dependent": true, "subset": [1, 3]})"));
  EXPECT_EQ(to_json(RootCount{6, CountMethod::bkk}),
            json::parse(R"({"value": "6", "method": "bkk"})"));
}

TEST(JsonProperties, PolytopeRoundTrip) {
  Rng rng(91);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = static_cast<int>(rng.integer(1, 4));
    std::vector<RationalVector> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(testing::random_rational_point(rng, dim, -3, 3, 5));
    const Polytope p = convex_hull(pts, dim);
    const json j = to_json(p);
    EXPECT_EQ(polytope_from_json(json::parse(j.dump())), p);
    EXPECT_EQ(to_json(polytope_from_json(j)), j);
  }
}

TEST(JsonProperties, PointSetRoundTrip) {
  Rng rng(92);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = static_cast<int>(rng.integer(1, 5));
    const PointSet a = testing::random_point_set(rng, dim, static_cast<int>(rng.integer(1, 8)), -9, 9);
    EXPECT_EQ(point_set_from_json(json::parse(to_json(a).dump())), a);
  }
}

TEST(JsonProperties, VirtualRoundTrip) {
  Rng rng(93);
  for (int trial = 0; trial < 30; ++trial) {
    const VirtualPolytope v(testing::random_lattice_polytope(rng, 2, 4, -3, 3, false),
                            testing::random_lattice_polytope(rng, 2, 4, -3, 3, false));
    EXPECT_EQ(virtual_from_json(json::parse(to_json(v).dump())), v);
  }
  EXPECT_EQ(virtual_from_json(to_json(cube(2))), VirtualPolytope(cube(2)));
}

}  // namespace
}  // namespace mixvol
