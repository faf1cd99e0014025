#include <algorithm>
#include <future>
#include <random>
#include <utility>

#include "linalg.hpp"
#include "mixvol/error.hpp"
#include "mixvol/newton_bkk.hpp"
#include "upoly.hpp"

namespace mixvol {

namespace {

using detail::UPoly;

constexpr long kCoefficientBound = 1'000'000;
constexpr int kMaxDraws = 10;
constexpr long kShears[] = {0, 1, -1, 2, -2, 3, -3};

using Exponent = std::pair<long, long>;

std::vector<Exponent> exponents_of(const LaurentPolynomial& f) {
  std::vector<Exponent> out;
  for (const auto& [e, c] : f.terms()) out.emplace_back(e[0].get_si(), e[1].get_si());
  return out;
}

/// Polynomial in y whose coefficients are integer polynomials in x:
/// coeff[j][i] multiplies x^i y^j.
struct YPoly {
  std::vector<IntegerVector> coeff;

  int y_degree() const { return static_cast<int>(coeff.size()) - 1; }

  int x_degree() const {
    int d = 0;
    for (const auto& c : coeff) d = std::max(d, static_cast<int>(c.size()) - 1);
    return d;
  }

  UPoly coefficient(int j) const { return UPoly::from_integers(coeff[static_cast<std::size_t>(j)]); }

  /// Coefficients in y after substituting x.
  IntegerVector at(long x) const {
    IntegerVector out;
    out.reserve(coeff.size());
    for (const auto& c : coeff) {
      Integer v = 0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
      out.push_back(std::move(v));
    }
    return out;
  }
};

/// Applies (a, b) -> (a, b + k a), shifts exponents to start at zero and
/// collects by powers of y.
YPoly sheared(const std::vector<Exponent>& exps, const std::vector<Integer>& coeffs, long k) {
  std::vector<Exponent> moved;
  for (const auto& [a, b] : exps) moved.emplace_back(a, b + k * a);
  long min_a = moved.front().first, min_b = moved.front().second;
  long max_b = min_b;
  for (const auto& [a, b] : moved) {
    min_a = std::min(min_a, a);
    min_b = std::min(min_b, b);
    max_b = std::max(max_b, b);
  }
  YPoly p;
  p.coeff.resize(static_cast<std::size_t>(max_b - min_b + 1));
  for (std::size_t t = 0; t < moved.size(); ++t) {
    const auto i = static_cast<std::size_t>(moved[t].first - min_a);
    auto& row = p.coeff[static_cast<std::size_t>(moved[t].second - min_b)];
    if (row.size() <= i) row.resize(i + 1, Integer(0));
    row[i] += coeffs[t];
  }
  return p;
}

/// Rows y^k f for k < count, as coefficient vectors of length width indexed by
/// the power of y.
void append_shifted_rows(std::vector<IntegerVector>& rows, const IntegerVector& f, int count,
                         int width) {
  for (int k = 0; k < count; ++k) {
    IntegerVector row(static_cast<std::size_t>(width), Integer(0));
    for (std::size_t j = 0; j < f.size(); ++j) row[j + static_cast<std::size_t>(k)] = f[j];
    rows.push_back(std::move(row));
  }
}

/// Coefficient of y^i in the j-th subresultant of two polynomials in y with
/// integer coefficients (j = 0 gives the resultant, i = 0).
Integer subresultant_coefficient(const IntegerVector& f, const IntegerVector& g, int j, int i) {
  const int d1 = static_cast<int>(f.size()) - 1;
  const int d2 = static_cast<int>(g.size()) - 1;
  const int width = d1 + d2 - j;
  std::vector<IntegerVector> rows;
  append_shifted_rows(rows, f, d2 - j, width);
  append_shifted_rows(rows, g, d1 - j, width);
  const std::size_t r = rows.size();
  // Columns: the r - 1 highest powers of y, then y^i.
  std::vector<IntegerVector> m(r, IntegerVector(r));
  for (std::size_t row = 0; row < r; ++row) {
    for (std::size_t col = 0; col + 1 < r; ++col) {
      m[row][col] = rows[row][static_cast<std::size_t>(width - 1) - col];
    }
    m[row][r - 1] = rows[row][static_cast<std::size_t>(i)];
  }
  return detail::determinant(std::move(m));
}

/// The subresultant coefficient as a polynomial in x, by exact interpolation.
UPoly subresultant_in_x(const YPoly& f, const YPoly& g, int j, int i) {
  const int bound = (g.y_degree() - j) * f.x_degree() + (f.y_degree() - j) * g.x_degree();
  std::vector<Rational> xs, ys;
  for (long x = 0; x <= bound; ++x) {
    IntegerVector fy = f.at(x), gy = g.at(x);
    xs.emplace_back(x);
    ys.emplace_back(subresultant_coefficient(fy, gy, j, i));
  }
  return detail::interpolate(xs, ys);
}

enum class Outcome { counted, retry_shear, redraw };

struct Attempt {
  Outcome outcome;
  Integer count;
};

Attempt count_with_shear(const std::vector<Exponent>& e1, const std::vector<Integer>& c1,
                         const std::vector<Exponent>& e2, const std::vector<Integer>& c2, long k) {
  YPoly f = sheared(e1, c1, k);
  YPoly g = sheared(e2, c2, k);
  if (f.y_degree() == 0 || g.y_degree() == 0) return {Outcome::retry_shear, 0};

  UPoly res = subresultant_in_x(f, g, 0, 0);
  if (res.is_zero()) return {Outcome::redraw, 0};
  res = res.shift_down(res.low_order());
  if (res.degree() == 0) return {Outcome::counted, 0};

  UPoly sq = res;
  const UPoly d = res.derivative();
  if (!detail::coprime(res, d)) sq = res / detail::gcd(res, d);

  const UPoly lc1 = f.coefficient(f.y_degree());
  const UPoly lc2 = g.coefficient(g.y_degree());
  if (!detail::coprime(sq, lc1) || !detail::coprime(sq, lc2)) return {Outcome::retry_shear, 0};

  UPoly s11, s10;
  if (f.y_degree() == 1) {
    s11 = lc1;
    s10 = f.coefficient(0);
  } else if (g.y_degree() == 1) {
    s11 = lc2;
    s10 = g.coefficient(0);
  } else {
    s11 = subresultant_in_x(f, g, 1, 1);
    s10 = subresultant_in_x(f, g, 1, 0);
  }
  // A root of sq with s11 = 0 carries two or more common y values.
  if (!detail::coprime(sq, s11)) return {Outcome::retry_shear, 0};
  // Remaining roots have the single common y = -s10/s11, zero exactly when s10 vanishes.
  int on_axis = 0;
  if (!detail::coprime(sq, s10)) on_axis = detail::gcd(sq, s10).degree();
  return {Outcome::counted, Integer(sq.degree() - on_axis)};
}

}  // namespace

RootCount oracle_count_2d(const LaurentPolynomial& f1, const LaurentPolynomial& f2,
                          std::uint64_t seed) {
  if (f1.num_variables() != 2 || f2.num_variables() != 2) {
    throw DomainError("the resultant oracle needs exactly 2 variables");
  }
  if (f1.terms().size() == 1 || f2.terms().size() == 1) return {0, CountMethod::oracle};

  const auto e1 = exponents_of(f1);
  const auto e2 = exponents_of(f2);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-kCoefficientBound, kCoefficientBound);
  auto draw = [&](std::size_t count) {
    std::vector<Integer> c;
    while (c.size() < count) {
      const long v = dist(rng);
      if (v != 0) c.emplace_back(v);
    }
    return c;
  };

  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    const auto c1 = draw(e1.size());
    const auto c2 = draw(e2.size());
    for (long k : kShears) {
      const Attempt a = count_with_shear(e1, c1, e2, c2, k);
      if (a.outcome == Outcome::counted) return {a.count, CountMethod::oracle};
      if (a.outcome == Outcome::redraw) break;
    }
  }
  throw DomainError("non-generic after retries");
}

OracleVote oracle_vote_2d(const LaurentPolynomial& f1, const LaurentPolynomial& f2,
                          std::span<const std::uint64_t> seeds, bool parallel) {
  std::vector<std::future<RootCount>> jobs;
  jobs.reserve(seeds.size());
  const auto policy = parallel ? std::launch::async : std::launch::deferred;
  for (std::uint64_t s : seeds) {
    jobs.push_back(std::async(policy, [&f1, &f2, s] { return oracle_count_2d(f1, f2, s); }));
  }
  OracleVote vote;
  for (auto& job : jobs) {
    try {
      ++vote.tally[job.get().value];
    } catch (const DomainError&) {
      ++vote.failed;
    }
  }
  if (vote.tally.empty()) throw DomainError("non-generic after retries");
  for (const auto& [value, n] : vote.tally) {
    if (n > vote.agreeing) {
      vote.value = value;
      vote.agreeing = n;
    }
  }
  return vote;
}

}  // namespace mixvol
