#include "mixvol/newton_bkk.hpp"

#include <stdexcept>

#include "mixvol/error.hpp"

namespace mixvol {

std::string to_string(CountMethod m) {
  switch (m) {
    case CountMethod::koushnirenko:
      return "koushnirenko";
    case CountMethod::bkk:
      return "bkk";
    case CountMethod::no_body:
      return "no_body";
    case CountMethod::oracle:
      break;
  }
  return "oracle";
}

PointSet support(const LaurentPolynomial& f) {
  return PointSet(static_cast<int>(f.num_variables()), f.support());
}

Polytope newton_polytope(const LaurentPolynomial& f) { return convex_hull(support(f)); }

namespace {

Integer normalized(const Rational& v, int n) {
  const Rational scaled = v * Rational(factorial(static_cast<unsigned>(n)));
  if (scaled.get_den() != 1 || scaled < 0) {
    throw std::logic_error("normalized volume " + to_string(scaled) + " is not a natural number");
  }
  return scaled.get_num();
}

int check_supports(std::span<const PointSet> supports, bool full, const char* what) {
  if (supports.empty()) throw DomainError(std::string(what) + ": no supports given");
  const int n = supports.front().ambient_dim();
  for (const auto& a : supports) {
    if (a.ambient_dim() != n) throw DomainError(std::string(what) + ": dimension mismatch");
  }
  if (full && supports.size() != static_cast<std::size_t>(n)) {
    throw DomainError(std::string(what) + ": expected " + std::to_string(n) + " supports, got " +
                      std::to_string(supports.size()));
  }
  if (supports.size() > static_cast<std::size_t>(n)) {
    throw DomainError(std::string(what) + ": more supports than variables");
  }
  return n;
}

}  // namespace

RootCount kushnirenko_count(const PointSet& a) {
  return {normalized(convex_hull(a).volume(), a.ambient_dim()), CountMethod::koushnirenko};
}

RootCount bkk_count(std::span<const PointSet> supports, EvalOptions options) {
  const int n = check_supports(supports, true, "BKK count");
  std::vector<Polytope> hulls;
  for (const auto& a : supports) hulls.push_back(convex_hull(a));
  return {normalized(mixed_volume(hulls, options), n), CountMethod::bkk};
}

RootCount no_body_index(std::span<const PointSet> supports) {
  const int n = check_supports(supports, true, "NO-body index");
  const std::size_t count = std::size_t{1} << supports.size();
  // sums[mask] built from sums[mask without its lowest bit]
  std::vector<PointSet> sums;
  sums.reserve(count);
  sums.push_back(zero_point_set(n));
  Rational total = 0;
  for (std::size_t mask = 1; mask < count; ++mask) {
    const std::size_t low = mask & (~mask + 1);
    const auto bit = static_cast<std::size_t>(__builtin_ctzll(low));
    sums.push_back(sumset(sums[mask ^ low], supports[bit]));
    const Rational v = convex_hull(sums.back()).volume();
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if ((supports.size() - size) % 2 == 1) {
      total -= v;
    } else {
      total += v;
    }
  }
  if (total.get_den() != 1 || total < 0) {
    throw std::logic_error("NO-body index " + to_string(total) + " is not a natural number");
  }
  return {total.get_num(), CountMethod::no_body};
}

DependenceWitness generic_empty_intersection(std::span<const PointSet> supports) {
  check_supports(supports, false, "empty-intersection criterion");
  std::vector<Polytope> hulls;
  for (const auto& a : supports) hulls.push_back(convex_hull(a));
  return affinely_dependent(hulls);
}

}  // namespace mixvol
