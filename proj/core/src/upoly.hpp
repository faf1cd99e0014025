#pragma once

// Dense univariate polynomials over Q, enough for resultant bookkeeping.

#include <cstdint>
#include <vector>

#include "mixvol/rational.hpp"

namespace mixvol::detail {

/// Coefficients from the constant term upwards; no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly from_integers(const IntegerVector& coeffs);

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  const Rational& leading() const { return c_.back(); }
  Rational operator()(const Rational& x) const;

  UPoly derivative() const;
  UPoly monic() const;
  /// Largest power of the variable dividing this polynomial.
  int low_order() const;
  UPoly shift_down(int k) const;
  /// Scaled to coprime integer coefficients with positive leading term.
  IntegerVector primitive_integers() const;

  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly operator/(const UPoly& a, const UPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// Degree of gcd(a, b) over Z/p, or -1 when p divides a leading coefficient
/// (the reduction is then inconclusive). a and b must have integer coefficients.
int modular_gcd_degree(const IntegerVector& a, const IntegerVector& b, std::uint64_t p);

/// True when gcd(a, b) = 1, decided by a modular shortcut when possible.
bool coprime(const UPoly& a, const UPoly& b);

/// The polynomial of degree < xs.size() through (xs[i], ys[i]).
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace mixvol::detail
