#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace mixvol {

using Integer = mpz_class;
using Rational = mpq_class;

using IntegerVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// p/q in lowest terms. mpq_class(p, q) does not reduce, so fractions are
/// always built through here.
inline Rational ratio(const Integer& p, const Integer& q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q" (q > 0) into a canonical rational.
/// Throws DomainError on anything else.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

/// Lexicographic comparison of equal-length vectors.
template <typename T>
std::strong_ordering lex_compare(const std::vector<T>& a, const std::vector<T>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

struct LexLess {
  template <typename T>
  bool operator()(const std::vector<T>& a, const std::vector<T>& b) const {
    return lex_compare(a, b) == std::strong_ordering::less;
  }
};

RationalVector to_rational(const IntegerVector& v);

/// True when every entry has denominator one.
bool is_integral(const RationalVector& v);

}  // namespace mixvol
