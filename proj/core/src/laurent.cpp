#include "mixvol/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "mixvol/error.hpp"

namespace mixvol {

bool is_variable_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

LaurentPolynomial::LaurentPolynomial(std::vector<std::string> variables, Terms terms)
    : vars_(std::move(variables)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!is_variable_name(vars_[i])) throw DomainError("invalid variable name '" + vars_[i] + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (vars_[i] == vars_[j]) throw DomainError("duplicate variable '" + vars_[i] + "'");
    }
  }
  for (auto& [e, c] : terms) {
    if (e.size() != vars_.size()) throw DomainError("exponent vector has the wrong length");
    if (c != 0) terms_.emplace(e, c);
  }
  if (terms_.empty()) throw DomainError("zero polynomial has no Newton polytope");
}

std::vector<IntegerVector> LaurentPolynomial::support() const {
  std::vector<IntegerVector> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  LaurentPolynomial parse() {
    LaurentPolynomial::Terms terms;
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (true) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        advance();
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [e, c] = term();
      if (sign < 0) c = -c;
      terms[e] += c;
      first = false;
      skip();
      if (at_end()) break;
    }
    LaurentPolynomial::Terms nonzero;
    for (auto& [e, c] : terms) {
      if (c != 0) nonzero.emplace(e, c);
    }
    return LaurentPolynomial(vars_, std::move(nonzero));
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

  Integer digits() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
    std::string buf;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      buf.push_back(peek());
      advance();
    }
    return Integer(buf);
  }

  Rational coefficient() {
    Integer num = digits();
    skip();
    if (peek() != '/') return Rational(num);
    advance();
    skip();
    const std::size_t line = line_, col = col_;
    Integer den = digits();
    if (den == 0) throw ParseError("zero denominator", line, col);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  std::pair<IntegerVector, Rational> term() {
    IntegerVector e(vars_.size(), Integer(0));
    Rational c = 1;
    while (true) {
      skip();
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= coefficient();
      } else if (std::isalpha(static_cast<unsigned char>(ch))) {
        const std::size_t line = line_, col = col_;
        std::string name;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
          name.push_back(peek());
          advance();
        }
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw ParseError("unknown variable '" + name + "'", line, col);
        Integer power = 1;
        skip();
        if (peek() == '^') {
          advance();
          skip();
          bool negative = false;
          if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            advance();
            skip();
          }
          power = digits();
          if (negative) power = -power;
        }
        e[static_cast<std::size_t>(it - vars_.begin())] += power;
      } else if (at_end()) {
        fail("unexpected end of input");
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      skip();
      if (peek() != '*') break;
      advance();
    }
    return {std::move(e), std::move(c)};
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

LaurentPolynomial parse_laurent(std::string_view text, const std::vector<std::string>& variables) {
  for (const auto& v : variables) {
    if (!is_variable_name(v)) throw DomainError("invalid variable name '" + v + "'");
  }
  return Parser(text, variables).parse();
}

std::string to_string(const LaurentPolynomial& f) {
  std::ostringstream out;
  bool first = true;
  const auto& terms = f.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    const bool constant = std::all_of(e.begin(), e.end(), [](const Integer& x) { return x == 0; });
    if (mag != 1 || constant) factors.push_back(to_string(mag));
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string factor = f.variables()[i];
      if (e[i] != 1) factor += "^" + e[i].get_str();
      factors.push_back(std::move(factor));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) out << '*';
      out << factors[i];
    }
  }
  return out.str();
}

}  // namespace mixvol
