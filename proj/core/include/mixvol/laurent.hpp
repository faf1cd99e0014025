#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mixvol/rational.hpp"

namespace mixvol {

/// Laurent polynomial with exact rational coefficients over named variables.
class LaurentPolynomial {
 public:
  using Terms = std::map<IntegerVector, Rational, LexLess>;

  /// Drops zero coefficients. Throws DomainError on an empty result, on
  /// duplicate or malformed variable names, or on exponent length mismatch.
  LaurentPolynomial(std::vector<std::string> variables, Terms terms);

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t num_variables() const noexcept { return vars_.size(); }
  const Terms& terms() const noexcept { return terms_; }
  std::vector<IntegerVector> support() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  std::vector<std::string> vars_;
  Terms terms_;
};

/// Grammar:
///   expression  := term (('+'|'-') term)*
///   term        := [coefficient '*'] factor ('*' factor)*
///   factor      := variable ['^' integer] | coefficient
///   coefficient := integer | integer '/' positive-integer
/// A sign may precede the first term and any exponent. Whitespace is ignored.
/// Errors carry 1-based line and column.
LaurentPolynomial parse_laurent(std::string_view text, const std::vector<std::string>& variables);

/// Canonical text: terms in decreasing lexicographic exponent order.
std::string to_string(const LaurentPolynomial& f);

bool is_variable_name(std::string_view name);

}  // namespace mixvol
