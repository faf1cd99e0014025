#include <gtest/gtest.h>

#include "mixvol/error.hpp"
#include "mixvol/geometry.hpp"
#include "oracles.hpp"

namespace mixvol {
namespace {

RationalVector pt(std::initializer_list<Rational> xs) { return RationalVector(xs); }

Polytope hull(int dim, std::vector<RationalVector> pts) { return convex_hull(pts, dim); }

Polytope segment(const RationalVector& a, const RationalVector& b) {
  return hull(static_cast<int>(a.size()), {a, b});
}

TEST(ConvexHull, DropsInteriorPoint) {
  const Polytope p =
      hull(2, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1}), pt({ratio(1, 2), ratio(1, 2)})});
  EXPECT_EQ(p.num_vertices(), 4u);
  EXPECT_EQ(p, cube(2));
  EXPECT_EQ(p.intrinsic_dim(), 2);
}

TEST(ConvexHull, SingletonIsZeroDimensional) {
  const Polytope p = hull(2, {pt({0, 0})});
  EXPECT_EQ(p.intrinsic_dim(), 0);
  EXPECT_EQ(p.vertices(), std::vector<RationalVector>{pt({0, 0})});
  EXPECT_EQ(p.volume(), 0);
  EXPECT_EQ(p, origin(2));
}

TEST(ConvexHull, VerticesAreLexicographic) {
  const Polytope p = hull(2, {pt({1, 1}), pt({0, 1}), pt({1, 0}), pt({0, 0})});
  const std::vector<RationalVector> expected{pt({0, 0}), pt({0, 1}), pt({1, 0}), pt({1, 1})};
  EXPECT_EQ(p.vertices(), expected);
}

TEST(ConvexHull, CollinearPointsKeepEndpoints) {
  const Polytope p = hull(3, {pt({0, 0, 0}), pt({1, 1, 1}), pt({3, 3, 3}), pt({2, 2, 2})});
  EXPECT_EQ(p.intrinsic_dim(), 1);
  const std::vector<RationalVector> expected{pt({0, 0, 0}), pt({3, 3, 3})};
  EXPECT_EQ(p.vertices(), expected);
}

TEST(ConvexHull, LowerDimensionalPolygonInSpace) {
  // A square lying in the plane z = x.
  const Polytope p = hull(3, {pt({0, 0, 0}), pt({1, 0, 1}), pt({0, 1, 0}), pt({1, 1, 1}),
                              pt({ratio(1, 2), ratio(1, 3), ratio(1, 2)})});
  EXPECT_EQ(p.intrinsic_dim(), 2);
  EXPECT_EQ(p.num_vertices(), 4u);
  EXPECT_EQ(p.volume(), 0);
  EXPECT_EQ(p.equalities().size(), 1u);
  EXPECT_TRUE(p.contains(pt({ratio(1, 2), ratio(1, 2), ratio(1, 2)})));
  EXPECT_FALSE(p.contains(pt({ratio(1, 2), ratio(1, 2), 0})));
}

TEST(ConvexHull, Errors) {
  EXPECT_THROW(convex_hull(std::vector<RationalVector>{}, 2), DomainError);
  EXPECT_THROW(hull(2, {pt({0, 0}), pt({1, 2, 3})}), DomainError);
  EXPECT_THROW(hull(7, {RationalVector(7, Rational(0))}), CapabilityError);
}

TEST(ConvexHull, CubeFacetsAndMembership) {
  const Polytope c = cube(3);
  EXPECT_EQ(c.facets().size(), 6u);
  EXPECT_TRUE(c.equalities().empty());
  EXPECT_TRUE(c.contains(pt({1, ratio(1, 2), 0})));
  EXPECT_FALSE(c.contains(pt({1, ratio(1, 2), ratio(-1, 9)})));
}

TEST(MinkowskiSum, OrthogonalSegmentsGiveSquare) {
  EXPECT_EQ(minkowski_sum(axis_segment(2, 0), axis_segment(2, 1)), cube(2));
}

TEST(MinkowskiSum, OriginIsIdentity) {
  const Polytope p = hull(2, {pt({0, 0}), pt({3, 1}), pt({1, 2})});
  EXPECT_EQ(minkowski_sum(p, origin(2)), p);
  EXPECT_EQ(minkowski_sum(origin(2), p), p);
}

TEST(MinkowskiSum, DimensionMismatch) {
  EXPECT_THROW(minkowski_sum(cube(2), cube(3)), DomainError);
}

TEST(Dilate, ScalesVertices) {
  EXPECT_EQ(dilate(cube(2), 3), cube(2, 3));
  EXPECT_EQ(dilate(cube(2), 3).volume(), 9);
  EXPECT_EQ(dilate(standard_simplex(3), ratio(1, 2)).volume(), ratio(1, 48));
}

TEST(Dilate, ZeroGivesOriginAndNegativeIsRejected) {
  EXPECT_EQ(dilate(cube(3), 0), origin(3));
  EXPECT_THROW(dilate(cube(2), -1), DomainError);
}

TEST(Volume, ClassicalValues) {
  EXPECT_EQ(cube(2).volume(), 1);
  EXPECT_EQ(standard_simplex(3).volume(), ratio(1, 6));
  EXPECT_EQ(standard_simplex(6).volume(), ratio(1, 720));
  EXPECT_EQ(cube(6, 2).volume(), 64);
  EXPECT_EQ(axis_segment(3, 1).volume(), 0);
  EXPECT_EQ(volume(axis_segment(1, 0, 5)), 5);
}

TEST(Volume, CrossPolytopeInFourDimensions) {
  std::vector<RationalVector> pts;
  for (int i = 0; i < 4; ++i) {
    for (int s : {-1, 1}) {
      RationalVector v(4, Rational(0));
      v[i] = s;
      pts.push_back(v);
    }
  }
  // 2^n / n!
  EXPECT_EQ(convex_hull(pts, 4).volume(), ratio(16, 24));
}

TEST(LatticePoints, SquareAndSegment) {
  EXPECT_EQ(lattice_points(cube(2)).size(), 4u);
  const PointSet seg = lattice_points(axis_segment(2, 0, 3));
  const std::vector<IntegerVector> expected{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
  EXPECT_EQ(seg.points(), expected);
}

TEST(LatticePoints, DilatedTriangleHasBinomialCount) {
  const PointSet a = lattice_points(dilate(standard_simplex(2), 4));
  EXPECT_EQ(a.size(), 15u);
  EXPECT_EQ(Integer(a.size()), binomial(6, 2));
  // Brute-force scan with the independent membership oracle.
  const auto verts = testing::as_rational({{0, 0}, {4, 0}, {0, 4}});
  std::size_t count = 0;
  for (int x = -1; x <= 5; ++x) {
    for (int y = -1; y <= 5; ++y) count += testing::in_hull(RationalVector{x, y}, verts) ? 1 : 0;
  }
  EXPECT_EQ(count, 15u);
}

TEST(LatticePoints, EmptyCompletionIsAnError) {
  const Polytope p = hull(2, {pt({ratio(1, 3), ratio(1, 3)}), pt({ratio(2, 3), ratio(1, 3)}),
                              pt({ratio(1, 3), ratio(2, 3)})});
  EXPECT_THROW(
      {
        try {
          lattice_points(p);
        } catch (const DomainError& e) {
          EXPECT_STREQ(e.what(), "empty completion");
          throw;
        }
      },
      DomainError);
}

TEST(Completion, FillsSegmentAndTriangle) {
  const PointSet seg(2, {{0, 0}, {2, 0}});
  EXPECT_EQ(completion(seg), PointSet(2, {{0, 0}, {1, 0}, {2, 0}}));
  const PointSet tri(2, {{0, 0}, {1, 1}, {2, 0}});
  const PointSet full = completion(tri);
  EXPECT_EQ(full.size(), 4u);
  EXPECT_TRUE(full.contains({1, 0}));
}

TEST(Completion, TriangleScanMatchesOracle) {
  // conv{(0,0),(2,2),(4,0)} contains (0,0),(1,0),(2,0),(3,0),(4,0),(1,1),(2,1),(3,1),(2,2).
  const PointSet tri(2, {{0, 0}, {2, 2}, {4, 0}});
  const PointSet full = completion(tri);
  const auto verts = testing::as_rational(tri.points());
  std::vector<IntegerVector> scanned;
  for (int x = 0; x <= 4; ++x) {
    for (int y = 0; y <= 2; ++y) {
      if (testing::in_hull(RationalVector{x, y}, verts)) scanned.push_back({x, y});
    }
  }
  EXPECT_EQ(full, PointSet(2, scanned));
  EXPECT_EQ(full.size(), 9u);
}

TEST(Completion, AlreadyCompleteIsUnchanged) {
  const PointSet a(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(completion(a), a);
}

TEST(PointSet, SortsAndDeduplicates) {
  const PointSet a(2, {{1, 0}, {0, 0}, {1, 0}});
  const std::vector<IntegerVector> expected{{0, 0}, {1, 0}};
  EXPECT_EQ(a.points(), expected);
  EXPECT_THROW(PointSet(2, {}), DomainError);
  EXPECT_THROW(PointSet(2, {{0, 0, 0}}), DomainError);
}

TEST(Sumset, ElementwiseSums) {
  const PointSet a(1, {{0}, {1}, {3}});
  const PointSet b(1, {{0}, {1}});
  EXPECT_EQ(sumset(a, b), PointSet(1, {{0}, {1}, {2}, {3}, {4}}));
}

TEST(AffinelyDependent, ParallelSegments) {
  const std::vector<Polytope> bodies{axis_segment(2, 0), axis_segment(2, 0, 2)};
  const DependenceWitness w = affinely_dependent(bodies);
  EXPECT_TRUE(w.dependent);
  EXPECT_EQ(w.subset, (std::vector<std::size_t>{0, 1}));
}

TEST(AffinelyDependent, PointBodyIsItsOwnWitness) {
  const std::vector<Polytope> bodies{cube(3), origin(3), cube(3)};
  const DependenceWitness w = affinely_dependent(bodies);
  EXPECT_TRUE(w.dependent);
  EXPECT_EQ(w.subset, (std::vector<std::size_t>{1}));
}

TEST(AffinelyDependent, SegmentAndSquareIndependent) {
  const std::vector<Polytope> bodies{axis_segment(2, 0), cube(2)};
  const DependenceWitness w = affinely_dependent(bodies);
  EXPECT_FALSE(w.dependent);
  EXPECT_TRUE(w.subset.empty());
  // Exhaustive: every subset has dimension at least its size.
  EXPECT_GE(sum_dimension(std::vector<Polytope>{bodies[0]}), 1);
  EXPECT_GE(sum_dimension(std::vector<Polytope>{bodies[1]}), 1);
  EXPECT_GE(sum_dimension(bodies), 2);
}

TEST(AffinelyDependent, TooManyBodies) {
  const std::vector<Polytope> bodies{cube(2), cube(2), cube(2)};
  EXPECT_THROW(affinely_dependent(bodies), DomainError);
}

TEST(AffinelyDependent, SmallestSubsetWins) {
  // Bodies 0 and 2 are parallel segments; body 1 is a square. The only
  // dependent subsets contain {0, 2}.
  const std::vector<Polytope> bodies{axis_segment(3, 2), cube(3), axis_segment(3, 2, 5)};
  const DependenceWitness w = affinely_dependent(bodies);
  EXPECT_TRUE(w.dependent);
  EXPECT_EQ(w.subset, (std::vector<std::size_t>{0, 2}));
}

TEST(Translate, ShiftsVertices) {
  const Polytope p = translate(cube(2), pt({ratio(1, 2), -3}));
  EXPECT_EQ(p.vertices().front(), pt({ratio(1, 2), -3}));
  EXPECT_EQ(p.volume(), 1);
}

}  // namespace
}  // namespace mixvol
