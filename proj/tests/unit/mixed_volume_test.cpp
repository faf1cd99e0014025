#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "generators.hpp"
#include "mixvol/error.hpp"
#include "mixvol/mixed_volume.hpp"

namespace mixvol {
namespace {

using testing::Rng;

Rational mv(std::vector<Polytope> bodies, EvalOptions o = {}) { return mixed_volume(bodies, o); }

TEST(MixedVolume, DiagonalIsVolume) {
  EXPECT_EQ(mv({cube(2), cube(2)}), 1);
  EXPECT_EQ(mv({standard_simplex(3), standard_simplex(3), standard_simplex(3)}), ratio(1, 6));
}

TEST(MixedVolume, UnitSegments) {
  EXPECT_EQ(mv({axis_segment(2, 0), axis_segment(2, 1)}), ratio(1, 2));
}

TEST(MixedVolume, DilatedSimplices) {
  for (int d1 = 1; d1 <= 4; ++d1) {
    for (int d2 = 1; d2 <= 4; ++d2) {
      // (1/2)(V((d1+d2) S) - V(d1 S) - V(d2 S)) with V(d S) = d^2 / 2.
      const Rational expected =
          ratio((d1 + d2) * (d1 + d2) - d1 * d1 - d2 * d2, 2) / 2;
      EXPECT_EQ(expected, ratio(d1 * d2, 2));
      EXPECT_EQ(mv({standard_simplex(2, d1), standard_simplex(2, d2)}), expected);
    }
  }
}

TEST(MixedVolume, SquareAndSimplex) {
  EXPECT_EQ(minkowski_sum(cube(2), standard_simplex(2)).volume(), ratio(7, 2));
  EXPECT_EQ(mv({cube(2), standard_simplex(2)}), 1);
}

TEST(MixedVolume, ParallelSegmentsVanish) {
  EXPECT_EQ(mv({axis_segment(2, 0), axis_segment(2, 0, 3)}), 0);
}

TEST(MixedVolume, Errors) {
  EXPECT_THROW(mv({cube(2)}), DomainError);
  EXPECT_THROW(mv({cube(2), cube(2), cube(2)}), DomainError);
  EXPECT_THROW(mv({cube(2), cube(3)}), DomainError);
  EXPECT_THROW(mv({}), DomainError);
}

TEST(MixedVolume, SixDimensionalCubes) {
  EXPECT_EQ(mv(std::vector<Polytope>(6, cube(6))), 1);
}

TEST(MinkowskiCombinations, MemoizedCombinations) {
  MinkowskiCombinations c({cube(2), standard_simplex(2)});
  EXPECT_EQ(c.combination({0, 0}), origin(2));
  EXPECT_EQ(c.combination({2, 0}), cube(2, 2));
  EXPECT_EQ(c.volume({1, 1}), ratio(7, 2));
  EXPECT_EQ(c.mixed_volume({0, 1}), 1);
  EXPECT_EQ(c.mixed_volume({1, 1}), ratio(1, 2));
  EXPECT_THROW(c.combination({1}), DomainError);
  EXPECT_THROW(c.mixed_volume({0}), DomainError);
}

TEST(VirtualVolume, Examples) {
  EXPECT_EQ(virtual_volume(VirtualPolytope(cube(2))), 1);
  EXPECT_EQ(virtual_volume(VirtualPolytope(cube(2), cube(2))), 0);
  EXPECT_EQ(virtual_volume(VirtualPolytope(dilate(cube(2), 2), cube(2))), 1);
  // (3S - S) = 2S
  EXPECT_EQ(virtual_volume(VirtualPolytope(standard_simplex(3, 3), standard_simplex(3))),
            ratio(8, 6));
}

TEST(VirtualPolytope, EqualityUsesCancellation) {
  EXPECT_EQ(VirtualPolytope(dilate(cube(2), 2), cube(2)), VirtualPolytope(cube(2)));
  EXPECT_FALSE(VirtualPolytope(cube(2)) == VirtualPolytope(standard_simplex(2)));
  EXPECT_THROW(VirtualPolytope(cube(2), cube(3)), DomainError);
}

TEST(VirtualMixedVolume, Examples) {
  const std::vector<VirtualPolytope> plain{VirtualPolytope(cube(2)),
                                           VirtualPolytope(standard_simplex(2))};
  EXPECT_EQ(virtual_mixed_volume(plain), 1);
  const std::vector<VirtualPolytope> zero_slot{VirtualPolytope(cube(2), cube(2)),
                                               VirtualPolytope(standard_simplex(2))};
  EXPECT_EQ(virtual_mixed_volume(zero_slot), 0);
  EXPECT_THROW(virtual_mixed_volume(std::vector<VirtualPolytope>{VirtualPolytope(cube(2))}),
               DomainError);
}

TEST(VirtualMixedVolume, TranslatesCancel) {
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const int dim = static_cast<int>(rng.integer(2, 3));
    const auto bodies = testing::random_family(rng, dim, dim, 4, -2, 2, false);
    std::vector<VirtualPolytope> vs;
    for (const auto& b : bodies) {
      const RationalVector t = to_rational(testing::random_point(rng, dim, -5, 5));
      vs.emplace_back(translate(b, t), convex_hull(std::vector<RationalVector>{t}, dim));
    }
    EXPECT_EQ(virtual_mixed_volume(vs), mixed_volume(bodies));
  }
}

TEST(MinkowskiZeroCriterion, Examples) {
  const std::vector<Polytope> parallel{axis_segment(2, 0), axis_segment(2, 0, 2)};
  EXPECT_TRUE(minkowski_zero_criterion(parallel).dependent);
  EXPECT_EQ(mixed_volume(parallel), 0);
  const std::vector<Polytope> squares{cube(2), cube(2)};
  EXPECT_FALSE(minkowski_zero_criterion(squares).dependent);
  EXPECT_EQ(mixed_volume(squares), 1);
  EXPECT_THROW(minkowski_zero_criterion(std::vector<Polytope>{cube(1), cube(1)}), DomainError);
}

TEST(MinkowskiZeroCriterion, ParallelPairForcesZero) {
  Rng rng(42);
  for (int trial = 0; trial < 5; ++trial) {
    // D1 + D2 is a segment parallel to (1, 2, -1).
    std::vector<Polytope> pair;
    for (int i = 0; i < 2; ++i) {
      const IntegerVector shift = testing::random_point(rng, 3, -2, 2);
      std::vector<IntegerVector> pts;
      for (int j = 0; j < 3; ++j) {
        const long t = rng.integer(-2, 2);
        pts.push_back({shift[0] + t, shift[1] + 2 * t, shift[2] - t});
      }
      pair.push_back(convex_hull(PointSet(3, pts)));
    }
    EXPECT_TRUE(minkowski_zero_criterion(pair).dependent);
    // A plane pair spans two dimensions and is not dependent.
    EXPECT_FALSE(minkowski_zero_criterion(std::vector<Polytope>{cube(3), axis_segment(3, 0)}).dependent);
    for (int x = 0; x < 20; ++x) {
      const Polytope third = testing::random_lattice_polytope(rng, 3, 4, -2, 2);
      EXPECT_EQ(mv({pair[0], pair[1], third}), 0);
    }
  }
}

// ---------------------------------------------------------------- properties

TEST(MixedVolumeProperties, SymmetryAllPermutations) {
  Rng rng(43);
  for (int trial = 0; trial < 4; ++trial) {
    const int dim = 3 + trial % 2;
    auto bodies = testing::random_family(rng, dim, dim, dim + 1, 0, 2, false);
    const Rational reference = mixed_volume(bodies);
    std::vector<int> perm(static_cast<std::size_t>(dim));
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
      std::vector<Polytope> permuted;
      for (int i : perm) permuted.push_back(bodies[i]);
      EXPECT_EQ(mixed_volume(permuted), reference);
    }
  }
}

TEST(MixedVolumeProperties, Multilinearity) {
  Rng rng(44);
  for (int trial = 0; trial < 15; ++trial) {
    const int dim = static_cast<int>(rng.integer(2, 3));
    auto rest = testing::random_family(rng, dim, dim, 4, -2, 2, false);
    const Polytope a = testing::random_lattice_polytope(rng, dim, 4, -2, 2, false);
    const Polytope b = testing::random_lattice_polytope(rng, dim, 4, -2, 2, false);
    auto with = [&](const Polytope& first) {
      auto v = rest;
      v[0] = first;
      return mixed_volume(v);
    };
    EXPECT_EQ(with(minkowski_sum(a, b)), with(a) + with(b));
    EXPECT_EQ(with(dilate(a, ratio(5, 3))), ratio(5, 3) * with(a));
  }
}

TEST(MixedVolumeProperties, NonnegativeAndMonotone) {
  Rng rng(45);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = static_cast<int>(rng.integer(2, 3));
    auto bodies = testing::random_family(rng, dim, dim, 4, -2, 2, false);
    const Rational base = mixed_volume(bodies);
    EXPECT_GE(base, 0);
    std::vector<RationalVector> bigger = bodies[0].vertices();
    bigger.push_back(to_rational(testing::random_point(rng, dim, -3, 3)));
    auto larger = bodies;
    larger[0] = convex_hull(bigger, dim);
    EXPECT_LE(base, mixed_volume(larger));
  }
}

TEST(MixedVolumeProperties, TranslationInvariancePerSlot) {
  Rng rng(46);
  for (int trial = 0; trial < 15; ++trial) {
    const int dim = static_cast<int>(rng.integer(2, 3));
    auto bodies = testing::random_family(rng, dim, dim, 4, -2, 2, false);
    const Rational base = mixed_volume(bodies);
    const auto slot = static_cast<std::size_t>(rng.integer(0, dim - 1));
    bodies[slot] = translate(bodies[slot], testing::random_rational_point(rng, dim, -3, 3, 5));
    EXPECT_EQ(mixed_volume(bodies), base);
  }
}

TEST(MixedVolumeProperties, IntegralityAndEngineAgreement) {
  Rng rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const int dim = static_cast<int>(rng.integer(1, 3));
    auto bodies = testing::random_family(rng, dim, dim, dim + 2, -2, 2, false);
    const Rational v = mixed_volume(bodies);
    const Rational scaled = v * Rational(factorial(static_cast<unsigned>(dim)));
    EXPECT_EQ(scaled.get_den(), 1);
    EXPECT_GE(scaled, 0);
    EXPECT_EQ(v, polarize(volume_function(dim), bodies, origin(dim)));
    EXPECT_EQ(v, polarize(volume_function(dim), bodies,
                          testing::random_lattice_polytope(rng, dim, 3, -1, 1, false)));
  }
}

TEST(MixedVolumeProperties, DiagonalOnRandomBodies) {
  Rng rng(48);
  for (int trial = 0; trial < 15; ++trial) {
    const int dim = static_cast<int>(rng.integer(1, 4));
    const Polytope p = testing::random_lattice_polytope(rng, dim, dim + 3, -2, 2, false);
    EXPECT_EQ(mixed_volume(std::vector<Polytope>(static_cast<std::size_t>(dim), p)), p.volume());
  }
}

TEST(MixedVolumeProperties, ParallelEvaluationIsIdentical) {
  Rng rng(49);
  for (int trial = 0; trial < 5; ++trial) {
    auto bodies = testing::random_family(rng, 3, 3, 5, -2, 2);
    EXPECT_EQ(mixed_volume(bodies, {true}), mixed_volume(bodies, {false}));
  }
}

TEST(MixedVolumeProperties, CriterionEquivalence) {
  Rng rng(50);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = 3;
    const int k = static_cast<int>(rng.integer(1, 3));
    std::vector<Polytope> bodies;
    for (int i = 0; i < k; ++i) {
      bodies.push_back(testing::random_lattice_polytope(rng, dim, static_cast<int>(rng.integer(1, 3)),
                                                        -1, 1, false));
    }
    const bool dependent = minkowski_zero_criterion(bodies).dependent;
    bool any_positive = false;
    for (int c = 0; c < 20; ++c) {
      auto full = bodies;
      while (static_cast<int>(full.size()) < dim) {
        full.push_back(testing::random_lattice_polytope(rng, dim, 4, -2, 2));
      }
      const Rational v = mixed_volume(full);
      if (dependent) EXPECT_EQ(v, 0);
      any_positive = any_positive || v > 0;
    }
    if (!dependent) {
      auto full = bodies;
      while (static_cast<int>(full.size()) < dim) full.push_back(cube(dim));
      EXPECT_GT(mixed_volume(full), 0);
    }
    EXPECT_EQ(any_positive, !dependent);
  }
}

}  // namespace
}  // namespace mixvol
