#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mixvol/geometry.hpp"
#include "mixvol/laurent.hpp"
#include "mixvol/mixed_volume.hpp"

namespace mixvol {

enum class CountMethod { koushnirenko, bkk, no_body, oracle };

std::string to_string(CountMethod m);

/// Number of solutions in the algebraic torus and how it was obtained.
struct RootCount {
  Integer value;
  CountMethod method = CountMethod::bkk;

  friend bool operator==(const RootCount&, const RootCount&) = default;
};

/// Exponent vectors of f as a point set in Z^n, n the number of variables.
PointSet support(const LaurentPolynomial& f);

Polytope newton_polytope(const LaurentPolynomial& f);

/// n! vol(conv A), the generic count for n equations sharing the support A.
RootCount kushnirenko_count(const PointSet& a);

/// n! MV(conv A_1, ..., conv A_n).
RootCount bkk_count(std::span<const PointSet> supports, EvalOptions options = {});

/// sum over nonempty I of (-1)^(n-|I|) vol(conv(sum_{i in I} A_i)), using the
/// sumsets themselves rather than Minkowski sums of hulls.
RootCount no_body_index(std::span<const PointSet> supports);

/// Generic members of the given k <= n monomial spaces have no common torus
/// zero exactly when the Newton polytopes are affinely dependent.
DependenceWitness generic_empty_intersection(std::span<const PointSet> supports);

/// Torus root count of a generic system with the supports of f1 and f2.
///
/// Coefficients are replaced by nonzero integers drawn uniformly from
/// [-10^6, 10^6] (seeded), y is eliminated with a Sylvester resultant, and the
/// distinct torus solutions are counted with exact gcd bookkeeping. A
/// unimodular change of torus coordinates is applied when two solutions share
/// an x coordinate. Throws DomainError("non-generic after retries") when ten
/// draws in a row are degenerate.
RootCount oracle_count_2d(const LaurentPolynomial& f1, const LaurentPolynomial& f2,
                          std::uint64_t seed);

struct OracleVote {
  Integer value;
  /// Runs agreeing with the winning value.
  std::size_t agreeing = 0;
  /// Seeds whose run raised a non-generic error.
  std::size_t failed = 0;
  std::map<Integer, std::size_t> tally;
};

/// Majority vote of oracle_count_2d over the given seeds; ties resolve to the
/// smaller count. Throws DomainError when every run fails.
OracleVote oracle_vote_2d(const LaurentPolynomial& f1, const LaurentPolynomial& f2,
                          std::span<const std::uint64_t> seeds, bool parallel = false);

}  // namespace mixvol
