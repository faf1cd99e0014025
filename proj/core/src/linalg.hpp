#pragma once

// Small exact linear algebra used by the hull and dependence code.

#include <vector>

#include "mixvol/rational.hpp"

namespace mixvol::detail {

/// Fraction-free (Bareiss) determinant of a square integer matrix.
/// The matrix is taken by value and destroyed.
Integer determinant(std::vector<IntegerVector> m);

Integer dot(const IntegerVector& a, const IntegerVector& b);

/// Divides the vector by the gcd of its entries (no-op on the zero vector).
Integer make_primitive(IntegerVector& v);

/// Row-echelon basis grown one vector at a time. Each stored row has a 1 at
/// its pivot column and zeros at the pivot columns of earlier rows.
class Echelon {
 public:
  explicit Echelon(int dim) : dim_(dim) {}

  /// Reduces v against the basis; appends it and returns true if independent.
  bool add(RationalVector v);
  bool add(const IntegerVector& v);

  int rank() const noexcept { return static_cast<int>(rows_.size()); }
  int dim() const noexcept { return dim_; }
  const std::vector<int>& pivots() const noexcept { return pivots_; }

  /// Integer basis of the orthogonal complement of the row space.
  std::vector<IntegerVector> orthogonal_complement() const;

 private:
  int dim_;
  std::vector<RationalVector> rows_;
  std::vector<int> pivots_;
};

}  // namespace mixvol::detail
