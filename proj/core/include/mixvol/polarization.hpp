#pragma once

// Polarization of homogeneous polynomials on commutative semigroups and their
// extension to the Grothendieck group of formal differences.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mixvol/error.hpp"
#include "mixvol/rational.hpp"

namespace mixvol {

/// A commutative semigroup with identity together with a rational-valued map
/// that is claimed to be a homogeneous polynomial of the given degree.
template <typename Elem>
struct SemigroupFunction {
  std::function<Elem(const Elem&, const Elem&)> add;
  Elem zero;
  std::function<bool(const Elem&, const Elem&)> eq;
  std::function<Rational(const Elem&)> value;
  int degree = 1;
};

/// Formal difference plus - minus.
template <typename Elem>
struct GroupElement {
  Elem plus;
  Elem minus;
};

/// k . a by repeated doubling.
template <typename Elem>
Elem multiple(const SemigroupFunction<Elem>& f, const Elem& a, unsigned long k) {
  Elem result = f.zero;
  Elem power = a;
  bool first = true;
  while (k > 0) {
    if (k & 1u) {
      result = first ? power : f.add(result, power);
      first = false;
    }
    k >>= 1u;
    if (k > 0) power = f.add(power, power);
  }
  return result;
}

namespace detail {

inline void check_arity(std::size_t got, int degree, const char* what) {
  if (degree < 1) throw DomainError("polarization degree must be positive");
  if (got != static_cast<std::size_t>(degree)) {
    throw DomainError(std::string(what) + ": expected " + std::to_string(degree) +
                      " arguments, got " + std::to_string(got));
  }
}

/// sums[mask] = base + sum_{i in mask} elems[i], each built from the mask
/// without its lowest set bit.
template <typename Elem>
std::vector<Elem> subset_sums(const SemigroupFunction<Elem>& f, const Elem& base,
                              const std::vector<Elem>& elems) {
  const std::size_t count = std::size_t{1} << elems.size();
  std::vector<Elem> sums;
  sums.reserve(count);
  sums.push_back(base);
  for (std::size_t mask = 1; mask < count; ++mask) {
    const std::size_t low = mask & (~mask + 1);
    std::size_t bit = 0;
    while ((std::size_t{1} << bit) != low) ++bit;
    sums.push_back(f.add(sums[mask ^ low], elems[bit]));
  }
  return sums;
}

inline bool odd_complement(std::size_t n, std::size_t mask) {
  return (n - static_cast<std::size_t>(__builtin_popcountll(mask))) % 2 == 1;
}

}  // namespace detail

/// (1/n!) sum_{I subset of {1..n}} (-1)^(n-|I|) F(base + sum_{i in I} a_i).
/// Independent of `base` whenever F is homogeneous of degree n.
template <typename Elem>
Rational polarize(const SemigroupFunction<Elem>& f, const std::vector<Elem>& args,
                  const Elem& base) {
  detail::check_arity(args.size(), f.degree, "polarize");
  const std::size_t n = args.size();
  const std::vector<Elem> sums = detail::subset_sums(f, base, args);
  Rational total = 0;
  for (std::size_t mask = 0; mask < sums.size(); ++mask) {
    const Rational v = f.value(sums[mask]);
    if (detail::odd_complement(n, mask)) {
      total -= v;
    } else {
      total += v;
    }
  }
  return total / Rational(factorial(static_cast<unsigned>(f.degree)));
}

template <typename Elem>
Rational polarize(const SemigroupFunction<Elem>& f, const std::vector<Elem>& args) {
  return polarize(f, args, f.zero);
}

/// F(a - b) = (1/n!) sum_k (-1)^(n-k) C(n,k) F(k a + (n-k) b).
template <typename Elem>
Rational group_value(const SemigroupFunction<Elem>& f, const GroupElement<Elem>& g) {
  if (f.degree < 1) throw DomainError("polarization degree must be positive");
  const unsigned n = static_cast<unsigned>(f.degree);
  Rational total = 0;
  for (unsigned k = 0; k <= n; ++k) {
    const Elem e = f.add(multiple(f, g.plus, k), multiple(f, g.minus, n - k));
    Rational term = Rational(binomial(n, k)) * f.value(e);
    if ((n - k) % 2 == 1) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total / Rational(factorial(n));
}

/// (1/n!) sum_{I subset of {1..n}} (-1)^|J| F(sum_{i in I} a_i + sum_{j in J} b_j),
/// J the complement of I.
template <typename Elem>
Rational group_polarize(const SemigroupFunction<Elem>& f,
                        const std::vector<GroupElement<Elem>>& gs) {
  detail::check_arity(gs.size(), f.degree, "group_polarize");
  const std::size_t n = gs.size();
  std::vector<Elem> plus, minus;
  for (const auto& g : gs) {
    plus.push_back(g.plus);
    minus.push_back(g.minus);
  }
  const std::vector<Elem> plus_sums = detail::subset_sums(f, f.zero, plus);
  const std::vector<Elem> minus_sums = detail::subset_sums(f, f.zero, minus);
  const std::size_t full = plus_sums.size() - 1;
  Rational total = 0;
  for (std::size_t mask = 0; mask <= full; ++mask) {
    const Rational v = f.value(f.add(plus_sums[mask], minus_sums[full ^ mask]));
    if (detail::odd_complement(n, mask)) {
      total -= v;
    } else {
      total += v;
    }
  }
  return total / Rational(factorial(static_cast<unsigned>(f.degree)));
}

/// Dense multivariate polynomial in m <= 4 variables with exponents < base,
/// indexed in mixed radix (first variable most significant).
struct GridPolynomial {
  std::size_t vars = 0;
  std::size_t base = 0;
  std::vector<Rational> coeffs;

  std::vector<unsigned> exponents(std::size_t index) const {
    std::vector<unsigned> e(vars);
    for (std::size_t i = vars; i-- > 0;) {
      e[i] = static_cast<unsigned>(index % base);
      index /= base;
    }
    return e;
  }

  const Rational& coefficient(const std::vector<unsigned>& e) const {
    std::size_t idx = 0;
    for (unsigned x : e) idx = idx * base + x;
    return coeffs[idx];
  }
};

/// Interpolates values on the grid {0..N}^m (mixed radix N+1, first coordinate
/// most significant) by the unique polynomial of degree <= N in each variable.
/// Newton forward differences, then conversion to the monomial basis.
GridPolynomial interpolate_grid(std::size_t vars, std::size_t top,
                                const std::vector<Rational>& values);

struct HomogeneityReport {
  bool homogeneous = true;
  /// Index of the first probe that failed.
  std::optional<std::size_t> failing_probe;

  explicit operator bool() const noexcept { return homogeneous; }
};

/// Checks, for each probe (a_1..a_m) with m <= 4, that k -> F(sum k_i a_i) on
/// {0..n+1}^m is a polynomial of total degree <= n with no terms of degree < n.
template <typename Elem>
HomogeneityReport is_homogeneous(const SemigroupFunction<Elem>& f,
                                 const std::vector<std::vector<Elem>>& probes) {
  if (f.degree < 1) throw DomainError("polarization degree must be positive");
  const std::size_t n = static_cast<std::size_t>(f.degree);
  const std::size_t top = n + 1;
  for (std::size_t p = 0; p < probes.size(); ++p) {
    const auto& probe = probes[p];
    const std::size_t m = probe.size();
    if (m == 0) continue;
    if (m > 4) throw DomainError("homogeneity probes are limited to 4 elements");

    // multiples[i][k] = k . a_i
    std::vector<std::vector<Elem>> multiples(m);
    for (std::size_t i = 0; i < m; ++i) {
      multiples[i].push_back(f.zero);
      for (std::size_t k = 1; k <= top; ++k) {
        multiples[i].push_back(f.add(multiples[i].back(), probe[i]));
      }
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < m; ++i) total *= top + 1;
    std::vector<Rational> values(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t rest = idx;
      std::vector<std::size_t> k(m);
      for (std::size_t i = m; i-- > 0;) {
        k[i] = rest % (top + 1);
        rest /= top + 1;
      }
      Elem e = multiples[0][k[0]];
      for (std::size_t i = 1; i < m; ++i) e = f.add(e, multiples[i][k[i]]);
      values[idx] = f.value(e);
    }

    const GridPolynomial poly = interpolate_grid(m, top, values);
    for (std::size_t idx = 0; idx < poly.coeffs.size(); ++idx) {
      if (poly.coeffs[idx] == 0) continue;
      std::size_t deg = 0;
      for (unsigned e : poly.exponents(idx)) deg += e;
      if (deg != n) return {false, p};
    }
  }
  return {};
}

}  // namespace mixvol
