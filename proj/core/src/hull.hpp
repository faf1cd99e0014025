#pragma once

#include <vector>

#include "mixvol/geometry.hpp"

namespace mixvol::detail {

struct HullData {
  /// Indices into the input of the extreme points.
  std::vector<std::size_t> vertices;
  int intrinsic_dim = 0;
  Rational volume = 0;
  std::vector<Halfspace> facets;
  std::vector<Hyperplane> equalities;
};

/// Exact convex hull of distinct rational points in dimension `dim`.
///
/// Works in the affine hull of the input (projected onto coordinate axes that
/// parametrize it injectively), scales to integers and runs an incremental
/// quickhull whose visible-facet cones form a placing triangulation; the volume
/// is accumulated from that triangulation.
HullData compute_hull(const std::vector<RationalVector>& points, int dim);

}  // namespace mixvol::detail
