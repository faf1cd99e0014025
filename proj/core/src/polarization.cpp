#include "mixvol/polarization.hpp"

namespace mixvol {

namespace {

// Applies a linear map along one axis of a tensor stored in mixed radix `base`.
// `line` receives the entries of one fibre and must transform them in place.
template <typename Fn>
void for_each_fibre(std::vector<Rational>& data, std::size_t vars, std::size_t base,
                    std::size_t axis, Fn line) {
  std::size_t stride = 1;
  for (std::size_t i = axis + 1; i < vars; ++i) stride *= base;
  const std::size_t block = stride * base;
  std::vector<Rational> fibre(base);
  for (std::size_t start = 0; start < data.size(); start += block) {
    for (std::size_t offset = 0; offset < stride; ++offset) {
      for (std::size_t t = 0; t < base; ++t) fibre[t] = data[start + offset + t * stride];
      line(fibre);
      for (std::size_t t = 0; t < base; ++t) data[start + offset + t * stride] = fibre[t];
    }
  }
}

// binom_coeffs[a][b]: coefficient of k^b in C(k, a).
std::vector<std::vector<Rational>> binomial_power_basis(std::size_t top) {
  std::vector<std::vector<Rational>> table(top + 1, std::vector<Rational>(top + 1, Rational(0)));
  std::vector<Rational> falling{Rational(1)};  // k (k-1) ... (k-a+1)
  for (std::size_t a = 0; a <= top; ++a) {
    const Rational inv_fact = Rational(1) / Rational(factorial(static_cast<unsigned>(a)));
    for (std::size_t b = 0; b < falling.size(); ++b) table[a][b] = falling[b] * inv_fact;
    std::vector<Rational> next(falling.size() + 1, Rational(0));
    for (std::size_t b = 0; b < falling.size(); ++b) {
      next[b + 1] += falling[b];
      next[b] -= falling[b] * static_cast<long>(a);
    }
    falling = std::move(next);
  }
  return table;
}

}  // namespace

GridPolynomial interpolate_grid(std::size_t vars, std::size_t top,
                                const std::vector<Rational>& values) {
  const std::size_t base = top + 1;
  GridPolynomial poly{vars, base, values};
  std::size_t expected = 1;
  for (std::size_t i = 0; i < vars; ++i) expected *= base;
  if (values.size() != expected) throw DomainError("grid size does not match its shape");

  for (std::size_t axis = 0; axis < vars; ++axis) {
    for_each_fibre(poly.coeffs, vars, base, axis, [top](std::vector<Rational>& v) {
      for (std::size_t j = 1; j <= top; ++j) {
        for (std::size_t t = top; t >= j; --t) v[t] -= v[t - 1];
      }
    });
  }

  const auto table = binomial_power_basis(top);
  for (std::size_t axis = 0; axis < vars; ++axis) {
    for_each_fibre(poly.coeffs, vars, base, axis, [&table, top](std::vector<Rational>& v) {
      std::vector<Rational> out(top + 1, Rational(0));
      for (std::size_t a = 0; a <= top; ++a) {
        if (v[a] == 0) continue;
        for (std::size_t b = 0; b <= a; ++b) out[b] += v[a] * table[a][b];
      }
      v = std::move(out);
    });
  }
  return poly;
}

}  // namespace mixvol
