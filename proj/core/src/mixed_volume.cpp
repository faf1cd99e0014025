#include "mixvol/mixed_volume.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>

#include "mixvol/error.hpp"

namespace mixvol {

namespace {

void check_family(std::span<const Polytope> bodies, const char* what) {
  if (bodies.empty()) throw DomainError(std::string(what) + ": no bodies given");
  const int n = bodies.front().ambient_dim();
  for (const auto& b : bodies) {
    if (b.ambient_dim() != n) throw DomainError(std::string(what) + ": dimension mismatch");
  }
  if (n > kMaxDimension) {
    throw CapabilityError("ambient dimension " + std::to_string(n) + " exceeds the supported maximum");
  }
}

void check_full_family(std::span<const Polytope> bodies, const char* what) {
  check_family(bodies, what);
  const int n = bodies.front().ambient_dim();
  if (bodies.size() != static_cast<std::size_t>(n)) {
    throw DomainError(std::string(what) + ": expected " + std::to_string(n) + " bodies, got " +
                      std::to_string(bodies.size()));
  }
}

Rational power(const Rational& x, unsigned m) {
  Rational r = 1;
  for (unsigned i = 0; i < m; ++i) r *= x;
  return r;
}

}  // namespace

SemigroupFunction<Polytope> volume_function(int ambient_dim) {
  SemigroupFunction<Polytope> f{
      [](const Polytope& a, const Polytope& b) { return minkowski_sum(a, b); },
      origin(ambient_dim),
      [](const Polytope& a, const Polytope& b) { return a == b; },
      [](const Polytope& a) { return a.volume(); },
      ambient_dim,
  };
  return f;
}

SemigroupFunction<PointSet> hull_volume_function(int ambient_dim) {
  SemigroupFunction<PointSet> f{
      [](const PointSet& a, const PointSet& b) { return sumset(a, b); },
      zero_point_set(ambient_dim),
      [](const PointSet& a, const PointSet& b) { return a == b; },
      [](const PointSet& a) { return convex_hull(a).volume(); },
      ambient_dim,
  };
  return f;
}

// ---------------------------------------------------------------- combinations

MinkowskiCombinations::MinkowskiCombinations(std::vector<Polytope> bodies, EvalOptions options)
    : dim_(bodies.empty() ? 0 : bodies.front().ambient_dim()),
      bodies_(std::move(bodies)),
      options_(options) {
  check_family(bodies_, "Minkowski combination");
}

Polytope MinkowskiCombinations::combination(const std::vector<unsigned>& m) {
  if (m.size() != bodies_.size()) throw DomainError("multiplicity vector has the wrong length");
  if (auto it = cache_.find(m); it != cache_.end()) return it->second;

  std::size_t j = 0;
  while (j < m.size() && m[j] == 0) ++j;
  Polytope result = [&] {
    if (j == m.size()) return origin(dim_);
    std::vector<unsigned> prev = m;
    --prev[j];
    return minkowski_sum(combination(prev), bodies_[j]);
  }();
  cache_.emplace(m, result);
  return result;
}

void MinkowskiCombinations::prefetch(const std::vector<std::vector<unsigned>>& wanted) {
  // Every predecessor chain of a wanted vector is materialized level by level;
  // within one level the sums only depend on the previous level.
  std::map<unsigned, std::vector<std::vector<unsigned>>> levels;
  std::vector<std::vector<unsigned>> stack = wanted;
  std::map<std::vector<unsigned>, bool> seen;
  while (!stack.empty()) {
    auto m = std::move(stack.back());
    stack.pop_back();
    if (cache_.count(m) || seen.count(m)) continue;
    seen[m] = true;
    unsigned total = 0;
    for (unsigned x : m) total += x;
    std::size_t j = 0;
    while (j < m.size() && m[j] == 0) ++j;
    if (j < m.size()) {
      auto prev = m;
      --prev[j];
      stack.push_back(std::move(prev));
    }
    levels[total].push_back(std::move(m));
  }
  for (auto& [level, items] : levels) {
    std::vector<std::future<Polytope>> jobs;
    jobs.reserve(items.size());
    for (const auto& m : items) {
      std::size_t j = 0;
      while (j < m.size() && m[j] == 0) ++j;
      if (j == m.size()) {
        jobs.push_back(std::async(std::launch::deferred, [d = dim_] { return origin(d); }));
        continue;
      }
      auto prev = m;
      --prev[j];
      const Polytope base = cache_.at(prev);
      const Polytope body = bodies_[j];
      jobs.push_back(std::async(std::launch::async,
                                [base, body] { return minkowski_sum(base, body); }));
    }
    for (std::size_t i = 0; i < items.size(); ++i) cache_.emplace(items[i], jobs[i].get());
  }
}

Rational MinkowskiCombinations::mixed_volume(const std::vector<std::size_t>& slots) {
  if (slots.size() != static_cast<std::size_t>(dim_)) {
    throw DomainError("mixed volume needs exactly " + std::to_string(dim_) + " bodies");
  }
  const std::size_t n = slots.size();
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::vector<unsigned>> multiplicities;
  multiplicities.reserve(count - 1);
  for (std::size_t mask = 1; mask < count; ++mask) {
    std::vector<unsigned> m(bodies_.size(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) ++m.at(slots[i]);
    }
    multiplicities.push_back(std::move(m));
  }
  if (options_.parallel) prefetch(multiplicities);

  Rational total = 0;
  for (std::size_t mask = 1; mask < count; ++mask) {
    const Rational v = volume(multiplicities[mask - 1]);
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if ((n - size) % 2 == 1) {
      total -= v;
    } else {
      total += v;
    }
  }
  return total / Rational(factorial(static_cast<unsigned>(n)));
}

Rational mixed_volume(std::span<const Polytope> bodies, EvalOptions options) {
  check_full_family(bodies, "mixed volume");
  std::vector<Polytope> distinct;
  std::vector<std::size_t> slots;
  for (const auto& b : bodies) {
    auto it = std::find(distinct.begin(), distinct.end(), b);
    slots.push_back(static_cast<std::size_t>(it - distinct.begin()));
    if (it == distinct.end()) distinct.push_back(b);
  }
  MinkowskiCombinations combos(std::move(distinct), options);
  return combos.mixed_volume(slots);
}

// ---------------------------------------------------------------- virtual bodies

VirtualPolytope::VirtualPolytope(Polytope plus, Polytope minus)
    : plus_(std::move(plus)), minus_(std::move(minus)) {
  if (plus_.ambient_dim() != minus_.ambient_dim()) {
    throw DomainError("virtual polytope parts have different dimensions");
  }
}

VirtualPolytope::VirtualPolytope(Polytope plus)
    : plus_(plus), minus_(origin(plus.ambient_dim())) {}

bool operator==(const VirtualPolytope& a, const VirtualPolytope& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  return minkowski_sum(a.plus_, b.minus_) == minkowski_sum(b.plus_, a.minus_);
}

Rational virtual_volume(const VirtualPolytope& v) {
  return group_value(volume_function(v.ambient_dim()), GroupElement<Polytope>{v.plus(), v.minus()});
}

Rational virtual_mixed_volume(std::span<const VirtualPolytope> vs) {
  if (vs.empty()) throw DomainError("virtual mixed volume: no bodies given");
  const int n = vs.front().ambient_dim();
  std::vector<GroupElement<Polytope>> gs;
  for (const auto& v : vs) {
    if (v.ambient_dim() != n) throw DomainError("virtual mixed volume: dimension mismatch");
    gs.push_back({v.plus(), v.minus()});
  }
  if (n > kMaxDimension) throw CapabilityError("ambient dimension exceeds the supported maximum");
  return group_polarize(volume_function(n), gs);
}

DependenceWitness minkowski_zero_criterion(std::span<const Polytope> bodies) {
  check_family(bodies, "Minkowski criterion");
  return affinely_dependent(bodies);
}

// ---------------------------------------------------------------- inequalities

InequalityReport check_af(std::span<const Polytope> bodies, EvalOptions options) {
  check_full_family(bodies, "Alexandrov-Fenchel check");
  const std::size_t n = bodies.size();
  if (n < 2) throw DomainError("Alexandrov-Fenchel check needs dimension at least 2");
  MinkowskiCombinations combos({bodies.begin(), bodies.end()}, options);
  std::vector<std::size_t> slots(n);
  for (std::size_t i = 0; i < n; ++i) slots[i] = i;

  auto with_front = [&slots](std::size_t a, std::size_t b) {
    auto s = slots;
    s[0] = a;
    s[1] = b;
    return s;
  };
  const Rational first = combos.mixed_volume(with_front(0, 0));
  const Rational second = combos.mixed_volume(with_front(1, 1));
  const Rational mixed = combos.mixed_volume(slots);
  Rational lhs = first * second;
  Rational rhs = mixed * mixed;
  InequalityReport report;
  report.holds = lhs <= rhs;
  report.exact = true;
  report.margin = Rational(rhs - lhs);
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
  return report;
}

InequalityReport check_af_power(unsigned m, std::span<const Polytope> bodies, EvalOptions options) {
  check_full_family(bodies, "Alexandrov-Fenchel power check");
  const std::size_t n = bodies.size();
  if (m < 2 || m > n) {
    throw DomainError("m must lie in [2, " + std::to_string(n) + "], got " + std::to_string(m));
  }
  MinkowskiCombinations combos({bodies.begin(), bodies.end()}, options);
  std::vector<std::size_t> slots(n);
  for (std::size_t i = 0; i < n; ++i) slots[i] = i;

  Rational lhs = 1;
  for (std::size_t i = 0; i < m; ++i) {
    auto s = slots;
    std::fill(s.begin(), s.begin() + m, i);
    lhs *= combos.mixed_volume(s);
  }
  Rational rhs = power(combos.mixed_volume(slots), m);
  InequalityReport report;
  report.holds = lhs <= rhs;
  report.exact = true;
  report.margin = Rational(rhs - lhs);
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
  return report;
}

namespace {

// Exact decision of a^(1/m) + b^(1/m) <= c^(1/m) when b/a is the m-th power
// of a rational (or one side vanishes). Empty when no exact route applies.
std::optional<int> exact_root_comparison(const Rational& a, const Rational& b, const Rational& c,
                                         unsigned m) {
  auto sign = [](const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); };
  if (a == 0) return sign(c - b);
  if (b == 0) return sign(c - a);
  Rational ratio = b / a;
  Integer num_root, den_root;
  const bool num_exact =
      mpz_root(num_root.get_mpz_t(), ratio.get_num_mpz_t(), m) != 0;
  const bool den_exact =
      mpz_root(den_root.get_mpz_t(), ratio.get_den_mpz_t(), m) != 0;
  if (!num_exact || !den_exact) return std::nullopt;
  Rational rho(num_root, den_root);
  rho.canonicalize();
  // (a^(1/m) (1 + rho))^m = a (1 + rho)^m
  return sign(c - a * power(1 + rho, m));
}

}  // namespace

InequalityReport check_bm(unsigned m, const Polytope& first, const Polytope& second,
                          std::span<const Polytope> rest, InequalityOptions options) {
  if (first.ambient_dim() != second.ambient_dim()) {
    throw DomainError("Brunn-Minkowski check: dimension mismatch");
  }
  const std::size_t n = static_cast<std::size_t>(first.ambient_dim());
  if (m < 2 || m > n) {
    throw DomainError("m must lie in [2, " + std::to_string(n) + "], got " + std::to_string(m));
  }
  if (rest.size() != n - m) {
    throw DomainError("Brunn-Minkowski check: expected " + std::to_string(n - m) +
                      " further bodies, got " + std::to_string(rest.size()));
  }
  if (options.digits < 20) throw DomainError("precision must be at least 20 digits");

  std::vector<Polytope> family{first, second, minkowski_sum(first, second)};
  family.insert(family.end(), rest.begin(), rest.end());
  check_family(family, "Brunn-Minkowski check");
  MinkowskiCombinations combos(family, options.eval);
  auto repeated = [&](std::size_t body) {
    std::vector<std::size_t> s(m, body);
    for (std::size_t i = 0; i < rest.size(); ++i) s.push_back(3 + i);
    return combos.mixed_volume(s);
  };
  const Rational a = repeated(0);
  const Rational b = repeated(1);
  const Rational c = repeated(2);

  mpfr_prec_t bits = bits_for_digits(options.digits);
  std::optional<bool> verdict;
  bool exact_equality = false;
  Decimal lhs_up(bits), rhs_down(bits);
  for (int attempt = 0; attempt < 5 && !verdict; ++attempt, bits *= 4) {
    lhs_up = add(rational_root(a, m, bits, Rounding::up), rational_root(b, m, bits, Rounding::up),
                 Rounding::up);
    rhs_down = rational_root(c, m, bits, Rounding::down);
    if (lhs_up <= rhs_down) {
      verdict = true;
      break;
    }
    const Decimal lhs_down = add(rational_root(a, m, bits, Rounding::down),
                                 rational_root(b, m, bits, Rounding::down), Rounding::down);
    const Decimal rhs_up = rational_root(c, m, bits, Rounding::up);
    if (rhs_up < lhs_down) {
      verdict = false;
      break;
    }
    if (auto exact = exact_root_comparison(a, b, c, m)) {
      verdict = *exact >= 0;
      exact_equality = *exact == 0;
      break;
    }
  }
  if (!verdict) throw DomainError("Brunn-Minkowski comparison did not resolve");

  if (m == 2) {
    // c = a + 2 B + b with B = MV(P1, P2, rest).
    const Rational mixed = (c - a - b) / 2;
    const bool af_form = mixed >= 0 && a * b <= mixed * mixed;
    if (af_form != *verdict) {
      throw std::logic_error("Brunn-Minkowski verdict disagrees with its exact quadratic form");
    }
  }

  InequalityReport report;
  report.holds = *verdict;
  report.exact = false;
  report.margin = exact_equality ? Decimal(lhs_up.precision())
                                 : sub(rhs_down, lhs_up, Rounding::down);
  report.lhs = std::move(lhs_up);
  report.rhs = std::move(rhs_down);
  return report;
}

// ---------------------------------------------------------------- planar

Polytope regular_polygon(unsigned k) {
  if (k < 3) throw DomainError("a regular polygon needs at least 3 vertices");
  constexpr unsigned long kDenominatorBits = 140;
  constexpr mpfr_prec_t kBits = 320;
  Integer denom = 1;
  denom <<= kDenominatorBits;

  Decimal two_pi = pi(kBits, Rounding::nearest);
  mpfr_mul_2ui(two_pi.get(), two_pi.get(), 1, MPFR_RNDN);
  std::vector<RationalVector> pts;
  pts.reserve(k);
  Decimal angle(kBits), s(kBits), c(kBits);
  for (unsigned j = 0; j < k; ++j) {
    mpfr_mul_ui(angle.get(), two_pi.get(), j, MPFR_RNDN);
    mpfr_div_ui(angle.get(), angle.get(), k, MPFR_RNDN);
    mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
    mpfr_mul_2ui(s.get(), s.get(), kDenominatorBits, MPFR_RNDN);
    mpfr_mul_2ui(c.get(), c.get(), kDenominatorBits, MPFR_RNDN);
    Integer zs, zc;
    mpfr_get_z(zs.get_mpz_t(), s.get(), MPFR_RNDN);
    mpfr_get_z(zc.get_mpz_t(), c.get(), MPFR_RNDN);
    Rational x(zc, denom), y(zs, denom);
    x.canonicalize();
    y.canonicalize();
    pts.push_back({x, y});
  }
  return convex_hull(pts, 2);
}

std::vector<Rational> squared_edge_lengths(const Polytope& polygon) {
  if (polygon.ambient_dim() != 2) throw DomainError("planar polytope required");
  const auto& vs = polygon.vertices();
  auto sq = [](const RationalVector& p, const RationalVector& q) {
    const Rational dx = q[0] - p[0], dy = q[1] - p[1];
    return Rational(dx * dx + dy * dy);
  };
  if (vs.size() == 1) return {};
  if (polygon.intrinsic_dim() == 1) {
    const Rational l = sq(vs.front(), vs.back());
    return {l, l};
  }

  RationalVector centre{0, 0};
  for (const auto& v : vs) {
    centre[0] += v[0];
    centre[1] += v[1];
  }
  centre[0] /= static_cast<long>(vs.size());
  centre[1] /= static_cast<long>(vs.size());

  std::vector<RationalVector> ring = vs;
  auto upper = [&centre](const RationalVector& p) {
    const Rational dy = p[1] - centre[1];
    return dy > 0 || (dy == 0 && p[0] > centre[0]);
  };
  std::sort(ring.begin(), ring.end(), [&](const RationalVector& p, const RationalVector& q) {
    const bool up = upper(p), uq = upper(q);
    if (up != uq) return up;
    const Rational cross = (p[0] - centre[0]) * (q[1] - centre[1]) -
                           (p[1] - centre[1]) * (q[0] - centre[0]);
    return cross > 0;
  });

  std::vector<Rational> out;
  out.reserve(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) out.push_back(sq(ring[i], ring[(i + 1) % ring.size()]));
  return out;
}

Decimal perimeter(const Polytope& polygon, mpfr_prec_t bits, Rounding r) {
  Decimal total(bits);
  for (const auto& l2 : squared_edge_lengths(polygon)) {
    total = add(total, rational_root(l2, 2, bits, r), r);
  }
  return total;
}

Decimal surface_area_estimate(const Polytope& polygon, unsigned k, int digits) {
  if (polygon.ambient_dim() != 2) throw DomainError("surface area estimate is planar only");
  if (k < 3) throw DomainError("k must be at least 3");
  const Polytope ball = regular_polygon(k);
  const Rational twice_mixed =
      minkowski_sum(polygon, ball).volume() - polygon.volume() - ball.volume();
  return Decimal::from_rational(twice_mixed, bits_for_digits(digits), Rounding::nearest);
}

InequalityReport isoperimetric_check(const Polytope& polygon, int digits) {
  if (polygon.ambient_dim() != 2) throw DomainError("isoperimetric check is planar only");
  if (digits < 20) throw DomainError("precision must be at least 20 digits");
  const mpfr_prec_t bits = bits_for_digits(digits);
  Decimal lhs = Decimal::from_rational(polygon.volume(), bits, Rounding::up);
  const Decimal length = perimeter(polygon, bits, Rounding::down);
  const Decimal four_pi = mul(Decimal::from_rational(4, bits, Rounding::up),
                              pi(bits, Rounding::up), Rounding::up);
  Decimal rhs = div(mul(length, length, Rounding::down), four_pi, Rounding::down);

  InequalityReport report;
  report.holds = lhs <= rhs;
  report.exact = false;
  report.margin = sub(rhs, lhs, Rounding::down);
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
  return report;
}

}  // namespace mixvol
