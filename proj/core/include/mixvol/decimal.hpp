#pragma once

// Arbitrary-precision binary floating point (MPFR) with explicit rounding
// direction, used where roots or pi make exact comparison impossible.

#include <cstdarg>
#include <cstdio>
#include <string>

#include "mixvol/rational.hpp"

#include <mpfr.h>

namespace mixvol {

enum class Rounding { down, up, nearest };

inline mpfr_rnd_t to_mpfr(Rounding r) {
  switch (r) {
    case Rounding::down:
      return MPFR_RNDD;
    case Rounding::up:
      return MPFR_RNDU;
    case Rounding::nearest:
      break;
  }
  return MPFR_RNDN;
}

/// Working precision in bits for the requested number of significant decimal
/// digits, plus guard bits.
mpfr_prec_t bits_for_digits(int digits);

class Decimal {
 public:
  explicit Decimal(mpfr_prec_t bits = 256) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  Decimal(const Decimal& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  Decimal(Decimal&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
  }
  Decimal& operator=(const Decimal& other) {
    if (this != &other) {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  Decimal& operator=(Decimal&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~Decimal() { mpfr_clear(v_); }

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }

  static Decimal from_rational(const Rational& x, mpfr_prec_t bits, Rounding r);

  /// Fixed-point rendering with `digits` digits after the point.
  std::string to_fixed(int digits) const;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  friend int cmp(const Decimal& a, const Decimal& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<=(const Decimal& a, const Decimal& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator<(const Decimal& a, const Decimal& b) { return mpfr_less_p(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

/// m-th root of a nonnegative rational, rounded in the given direction.
Decimal rational_root(const Rational& x, unsigned m, mpfr_prec_t bits, Rounding r);

Decimal add(const Decimal& a, const Decimal& b, Rounding r);
Decimal sub(const Decimal& a, const Decimal& b, Rounding r);
Decimal mul(const Decimal& a, const Decimal& b, Rounding r);
Decimal div(const Decimal& a, const Decimal& b, Rounding r);
Decimal pi(mpfr_prec_t bits, Rounding r);

}  // namespace mixvol
