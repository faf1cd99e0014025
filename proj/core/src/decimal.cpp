#include "mixvol/decimal.hpp"

#include <algorithm>
#include <cmath>

#include "mixvol/error.hpp"

namespace mixvol {

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(std::max(digits, 1) * 3.3219280948873623)) + 32;
}

Decimal Decimal::from_rational(const Rational& x, mpfr_prec_t bits, Rounding r) {
  Decimal d(bits);
  mpfr_set_q(d.v_, x.get_mpq_t(), to_mpfr(r));
  return d;
}

std::string Decimal::to_fixed(int digits) const {
  char* buf = nullptr;
  if (mpfr_zero_p(v_)) {
    Decimal zero(precision());
    mpfr_asprintf(&buf, "%.*Rf", digits, zero.v_);
  } else {
    mpfr_asprintf(&buf, "%.*Rf", digits, v_);
  }
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

Decimal rational_root(const Rational& x, unsigned m, mpfr_prec_t bits, Rounding r) {
  if (x < 0) throw DomainError("root of a negative number");
  Decimal base = Decimal::from_rational(x, bits, r);
  Decimal out(bits);
  mpfr_rootn_ui(out.get(), base.get(), m, to_mpfr(r));
  return out;
}

namespace {

mpfr_prec_t joint_precision(const Decimal& a, const Decimal& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

Decimal add(const Decimal& a, const Decimal& b, Rounding r) {
  Decimal out(joint_precision(a, b));
  mpfr_add(out.get(), a.get(), b.get(), to_mpfr(r));
  return out;
}

Decimal sub(const Decimal& a, const Decimal& b, Rounding r) {
  Decimal out(joint_precision(a, b));
  mpfr_sub(out.get(), a.get(), b.get(), to_mpfr(r));
  return out;
}

Decimal mul(const Decimal& a, const Decimal& b, Rounding r) {
  Decimal out(joint_precision(a, b));
  mpfr_mul(out.get(), a.get(), b.get(), to_mpfr(r));
  return out;
}

Decimal div(const Decimal& a, const Decimal& b, Rounding r) {
  Decimal out(joint_precision(a, b));
  mpfr_div(out.get(), a.get(), b.get(), to_mpfr(r));
  return out;
}

Decimal pi(mpfr_prec_t bits, Rounding r) {
  Decimal out(bits);
  mpfr_const_pi(out.get(), to_mpfr(r));
  return out;
}

}  // namespace mixvol
