#pragma once

#include <map>
#include <span>
#include <variant>
#include <vector>

#include "mixvol/decimal.hpp"
#include "mixvol/geometry.hpp"
#include "mixvol/polarization.hpp"

namespace mixvol {

struct EvalOptions {
  /// Evaluate independent subset sums concurrently. Results are identical.
  bool parallel = false;
};

/// Volume on (polytopes, Minkowski sum), a homogeneous polynomial of degree n.
SemigroupFunction<Polytope> volume_function(int ambient_dim);

/// A -> vol(conv A) on (finite lattice point sets, elementwise sum).
SemigroupFunction<PointSet> hull_volume_function(int ambient_dim);

/// Memoized Minkowski combinations m_1 P_1 + ... + m_r P_r of a fixed family.
/// Not thread-safe; one instance per evaluation.
class MinkowskiCombinations {
 public:
  explicit MinkowskiCombinations(std::vector<Polytope> bodies, EvalOptions options = {});

  std::size_t size() const noexcept { return bodies_.size(); }
  int ambient_dim() const noexcept { return dim_; }

  Polytope combination(const std::vector<unsigned>& multiplicities);
  Rational volume(const std::vector<unsigned>& multiplicities) {
    return combination(multiplicities).volume();
  }

  /// MV(P_{slots[0]}, ..., P_{slots[n-1]}) by inclusion-exclusion over the
  /// 2^n - 1 nonempty slot subsets. Requires slots.size() == ambient_dim.
  Rational mixed_volume(const std::vector<std::size_t>& slots);

 private:
  void prefetch(const std::vector<std::vector<unsigned>>& wanted);

  int dim_;
  std::vector<Polytope> bodies_;
  EvalOptions options_;
  std::map<std::vector<unsigned>, Polytope> cache_;
};

/// MV_n of exactly n = ambient_dim polytopes.
Rational mixed_volume(std::span<const Polytope> bodies, EvalOptions options = {});

/// Formal difference of two polytopes, an element of the Grothendieck group.
class VirtualPolytope {
 public:
  VirtualPolytope(Polytope plus, Polytope minus);
  explicit VirtualPolytope(Polytope plus);

  const Polytope& plus() const noexcept { return plus_; }
  const Polytope& minus() const noexcept { return minus_; }
  int ambient_dim() const noexcept { return plus_.ambient_dim(); }

  /// (P, Q) == (P', Q') iff P + Q' == P' + Q.
  friend bool operator==(const VirtualPolytope& a, const VirtualPolytope& b);

 private:
  Polytope plus_;
  Polytope minus_;
};

Rational virtual_volume(const VirtualPolytope& v);
Rational virtual_mixed_volume(std::span<const VirtualPolytope> vs);

/// Minkowski's vanishing criterion for k <= n bodies.
DependenceWitness minkowski_zero_criterion(std::span<const Polytope> bodies);

using Number = std::variant<Rational, Decimal>;

/// Outcome of checking lhs <= rhs.
struct InequalityReport {
  Number lhs;
  Number rhs;
  bool holds = false;
  /// True when both sides are exact rationals compared exactly.
  bool exact = false;
  /// rhs - lhs (rounded down when decimal).
  Number margin;
};

struct InequalityOptions {
  /// Significant decimal digits for root-bearing comparisons.
  int digits = 60;
  EvalOptions eval;
};

/// MV(P1,P1,P3..Pn) * MV(P2,P2,P3..Pn) <= MV(P1,P2,P3..Pn)^2.
InequalityReport check_af(std::span<const Polytope> bodies, EvalOptions options = {});

/// prod_{i<=m} MV(P_i [m times], P_{m+1}..P_n) <= MV(P_1..P_n)^m.
InequalityReport check_af_power(unsigned m, std::span<const Polytope> bodies,
                                EvalOptions options = {});

/// MV(P1 [m], rest)^(1/m) + MV(P2 [m], rest)^(1/m) <= MV(P1+P2 [m], rest)^(1/m).
///
/// Roots are evaluated with the left side rounded up and the right side
/// rounded down. When that is inconclusive (equality cases) the precision is
/// raised, and an exact decision is attempted for homothetic-type equality.
/// For m = 2 the verdict is cross-checked against the exact quadratic form
/// V(P1) V(P2) <= MV(P1, P2)^2 and a disagreement throws std::logic_error.
InequalityReport check_bm(unsigned m, const Polytope& first, const Polytope& second,
                          std::span<const Polytope> rest, InequalityOptions options = {});

/// Regular k-gon of unit circumradius centred at the origin; every vertex is
/// a dyadic rational within 2^-140 of the unit circle.
Polytope regular_polygon(unsigned k);

/// Squared edge lengths of a planar polytope taken around its boundary
/// (a segment contributes its length twice).
std::vector<Rational> squared_edge_lengths(const Polytope& polygon);

/// Boundary length of a planar polytope, rounded in the given direction.
Decimal perimeter(const Polytope& polygon, mpfr_prec_t bits, Rounding r);

/// 2 * MV(P, B_k) for the regular k-gon B_k; tends to the perimeter of P.
Decimal surface_area_estimate(const Polytope& polygon, unsigned k, int digits = 60);

/// V(P) <= l(dP)^2 / (4 pi) for a planar polytope, at `digits` precision.
InequalityReport isoperimetric_check(const Polytope& polygon, int digits = 60);

}  // namespace mixvol
