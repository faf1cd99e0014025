#include "linalg.hpp"

#include <algorithm>
#include <utility>

namespace mixvol::detail {

Integer determinant(std::vector<IntegerVector> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  Integer t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // m[i][j] = (m[i][j]*m[k][k] - m[i][k]*m[k][j]) / prev
        mpz_mul(t.get_mpz_t(), m[i][j].get_mpz_t(), m[k][k].get_mpz_t());
        mpz_submul(t.get_mpz_t(), m[i][k].get_mpz_t(), m[k][j].get_mpz_t());
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign > 0 ? Integer(m[n - 1][n - 1]) : Integer(-m[n - 1][n - 1]);
}

Integer dot(const IntegerVector& a, const IntegerVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  }
  return s;
}

Integer make_primitive(IntegerVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return g;
}

bool Echelon::add(RationalVector v) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int p = pivots_[r];
    if (v[p] == 0) continue;
    const Rational f = v[p];
    for (int j = 0; j < dim_; ++j) {
      if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
    }
  }
  int pivot = -1;
  for (int j = 0; j < dim_; ++j) {
    if (v[j] != 0) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) return false;
  const Rational inv = 1 / v[pivot];
  for (auto& x : v) x *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool Echelon::add(const IntegerVector& v) { return add(to_rational(v)); }

std::vector<IntegerVector> Echelon::orthogonal_complement() const {
  // Fully reduce a copy so that every pivot column is a unit column.
  std::vector<RationalVector> rows = rows_;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const int p = pivots_[r];
    for (std::size_t s = 0; s < rows.size(); ++s) {
      if (s == r || rows[s][p] == 0) continue;
      const Rational f = rows[s][p];
      for (int j = 0; j < dim_; ++j) rows[s][j] -= f * rows[r][j];
    }
  }
  std::vector<bool> is_pivot(dim_, false);
  for (int p : pivots_) is_pivot[p] = true;

  std::vector<IntegerVector> basis;
  for (int free = 0; free < dim_; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(dim_, Rational(0));
    x[free] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) x[pivots_[r]] = -rows[r][free];
    Integer lcm = 1;
    for (const auto& c : x) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    IntegerVector iv(dim_);
    for (int j = 0; j < dim_; ++j) {
      const Rational scaled = x[j] * lcm;
      iv[j] = scaled.get_num();
    }
    make_primitive(iv);
    basis.push_back(std::move(iv));
  }
  return basis;
}

}  // namespace mixvol::detail
