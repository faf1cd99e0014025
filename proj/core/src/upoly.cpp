#include "upoly.hpp"

#include <stdexcept>

namespace mixvol::detail {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::from_integers(const IntegerVector& coeffs) {
  std::vector<Rational> c(coeffs.begin(), coeffs.end());
  return UPoly(std::move(c));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::operator()(const Rational& x) const {
  Rational v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = c_;
  const Rational lead = c.back();
  for (auto& x : c) x /= lead;
  return UPoly(std::move(c));
}

int UPoly::low_order() const {
  int k = 0;
  while (k < static_cast<int>(c_.size()) && c_[k] == 0) ++k;
  return k;
}

UPoly UPoly::shift_down(int k) const {
  if (k >= static_cast<int>(c_.size())) return {};
  return UPoly(std::vector<Rational>(c_.begin() + k, c_.end()));
}

IntegerVector UPoly::primitive_integers() const {
  Integer den = 1;
  for (const auto& x : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  IntegerVector out;
  out.reserve(c_.size());
  Integer g = 0;
  for (const auto& x : c_) {
    Integer v = x.get_num() * (den / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (g != 0) {
    if (out.back() < 0) g = -g;
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const int dq = a.degree() - db;
  std::vector<Rational> quot(dq >= 0 ? dq + 1 : 0);
  for (int k = dq; k >= 0; --k) {
    const Rational t = rem[k + db] / bc.back();
    quot[k] = t;
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= t * bc[j];
  }
  q = UPoly(std::move(quot));
  r = UPoly(std::move(rem));
}

UPoly operator/(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    UPoly q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::vector<u64> reduce(const IntegerVector& v, u64 p) {
  static_assert(sizeof(unsigned long) == sizeof(u64));
  std::vector<u64> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = mpz_fdiv_ui(v[i].get_mpz_t(), p);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

int modular_gcd_degree(const IntegerVector& a, const IntegerVector& b, std::uint64_t p) {
  auto x = reduce(a, p);
  auto y = reduce(b, p);
  if (x.size() != a.size() || y.size() != b.size()) return -1;
  if (x.empty()) return static_cast<int>(y.size()) - 1;
  while (!y.empty()) {
    // x <- x mod y
    const u64 inv = powmod(y.back(), p - 2, p);
    while (x.size() >= y.size()) {
      const u64 t = mulmod(x.back(), inv, p);
      const std::size_t off = x.size() - y.size();
      for (std::size_t j = 0; j < y.size(); ++j) {
        x[off + j] = (x[off + j] + p - mulmod(t, y[j], p)) % p;
      }
      while (!x.empty() && x.back() == 0) x.pop_back();
      if (x.empty()) break;
    }
    std::swap(x, y);
  }
  return static_cast<int>(x.size()) - 1;
}

bool coprime(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b.degree() == 0;
  if (b.is_zero()) return a.degree() == 0;
  if (a.degree() == 0 || b.degree() == 0) return true;
  const IntegerVector ia = a.primitive_integers();
  const IntegerVector ib = b.primitive_integers();
  // The gcd over Z/p has degree at least that over Q for good primes.
  for (std::uint64_t p : {4611686018427387847ull, 4611686018427387817ull}) {
    if (modular_gcd_degree(ia, ib, p) == 0) return true;
  }
  return gcd(a, b).degree() == 0;
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  }
  // Horner on the Newton form.
  std::vector<Rational> poly{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * xs[k];
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  return UPoly(std::move(poly));
}

}  // namespace mixvol::detail
