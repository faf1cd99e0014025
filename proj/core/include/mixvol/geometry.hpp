#pragma once

// Exact lattice point sets and rational polytopes in vertex representation.

#include <memory>
#include <span>
#include <vector>

#include "mixvol/rational.hpp"

namespace mixvol {

/// Largest ambient dimension the geometry kernel accepts.
inline constexpr int kMaxDimension = 6;

/// Nonempty finite set of integer points, stored sorted and deduplicated.
class PointSet {
 public:
  PointSet(int ambient_dim, std::vector<IntegerVector> points);

  int ambient_dim() const noexcept { return dim_; }
  const std::vector<IntegerVector>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool contains(const IntegerVector& p) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  int dim_;
  std::vector<IntegerVector> points_;
};

/// Elementwise sum {a + b : a in A, b in B}.
PointSet sumset(const PointSet& a, const PointSet& b);

/// {0} in Z^n.
PointSet zero_point_set(int ambient_dim);

/// Closed half-space normal . x <= offset.
struct Halfspace {
  IntegerVector normal;
  Rational offset;
};

/// Affine hyperplane normal . x == offset.
struct Hyperplane {
  IntegerVector normal;
  Rational offset;
};

/// Bounded convex polytope with exact rational vertices.
///
/// Immutable; copies share the underlying data. Vertices are exactly the
/// extreme points, sorted lexicographically, so operator== is geometric
/// equality. The volume and an inequality description are computed once at
/// construction.
class Polytope {
 public:
  int ambient_dim() const noexcept;
  int intrinsic_dim() const noexcept;
  const std::vector<RationalVector>& vertices() const noexcept;
  std::size_t num_vertices() const noexcept { return vertices().size(); }

  /// Lebesgue volume in the ambient dimension (0 when not full-dimensional).
  const Rational& volume() const noexcept;

  /// Facet inequalities. Together with equalities() they cut out the polytope.
  const std::vector<Halfspace>& facets() const noexcept;
  /// Equations of the affine hull; empty when full-dimensional.
  const std::vector<Hyperplane>& equalities() const noexcept;

  bool contains(const RationalVector& x) const;
  bool is_lattice() const;

  friend bool operator==(const Polytope& a, const Polytope& b);

 private:
  struct Data;
  explicit Polytope(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;

  friend Polytope convex_hull(std::span<const RationalVector>, int);
};

Polytope convex_hull(std::span<const RationalVector> points, int ambient_dim);
Polytope convex_hull(const PointSet& points);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope minkowski_sum(std::span<const Polytope> bodies);

/// k . P for rational k >= 0; k = 0 gives the origin.
Polytope dilate(const Polytope& p, const Rational& k);

/// P + {t}.
Polytope translate(const Polytope& p, const RationalVector& t);

/// The singleton {0}.
Polytope origin(int ambient_dim);

inline const Rational& volume(const Polytope& p) { return p.volume(); }

/// All integer points of P. Throws DomainError("empty completion") if none.
PointSet lattice_points(const Polytope& p);

/// conv(A) intersected with Z^n.
PointSet completion(const PointSet& a);

/// Dimension of the Minkowski sum of the given bodies (rank of the union of
/// their direction spaces); -1 never occurs since bodies are nonempty.
int sum_dimension(std::span<const Polytope> bodies);

struct DependenceWitness {
  bool dependent = false;
  /// 0-based indices of a smallest offending subset; empty when independent.
  std::vector<std::size_t> subset;
};

/// Finds a smallest nonempty J with dim(sum_{j in J} P_j) < |J|, ties broken
/// lexicographically. Requires 1 <= k <= ambient_dim.
DependenceWitness affinely_dependent(std::span<const Polytope> bodies);

/// Axis-aligned segment [0, length * e_axis].
Polytope axis_segment(int ambient_dim, int axis, const Rational& length = 1);

/// [0, side]^n.
Polytope cube(int ambient_dim, const Rational& side = 1);

/// conv{0, side*e_1, ..., side*e_n}.
Polytope standard_simplex(int ambient_dim, const Rational& side = 1);

}  // namespace mixvol
