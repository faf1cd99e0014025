#include "mixvol/geometry.hpp"

#include <algorithm>
#include <string>

#include "hull.hpp"
#include "linalg.hpp"
#include "mixvol/error.hpp"

namespace mixvol {

namespace {

void check_dimension(int dim) {
  if (dim < 1) throw DomainError("ambient dimension must be positive");
  if (dim > kMaxDimension) {
    throw CapabilityError("ambient dimension " + std::to_string(dim) +
                          " exceeds the supported maximum of " + std::to_string(kMaxDimension));
  }
}

void check_same_dim(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) {
    throw DomainError("dimension mismatch: " + std::to_string(p.ambient_dim()) + " vs " +
                      std::to_string(q.ambient_dim()));
  }
}

template <typename V>
void sort_unique(std::vector<V>& v) {
  std::sort(v.begin(), v.end(), LexLess{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

// ---------------------------------------------------------------- PointSet

PointSet::PointSet(int ambient_dim, std::vector<IntegerVector> points)
    : dim_(ambient_dim), points_(std::move(points)) {
  if (dim_ < 1) throw DomainError("ambient dimension must be positive");
  if (points_.empty()) throw DomainError("empty point set");
  for (const auto& p : points_) {
    if (static_cast<int>(p.size()) != dim_) {
      throw DomainError("point of length " + std::to_string(p.size()) +
                        " in a point set of dimension " + std::to_string(dim_));
    }
  }
  sort_unique(points_);
}

bool PointSet::contains(const IntegerVector& p) const {
  return std::binary_search(points_.begin(), points_.end(), p, LexLess{});
}

PointSet sumset(const PointSet& a, const PointSet& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DomainError("dimension mismatch in set sum");
  std::vector<IntegerVector> out;
  out.reserve(a.size() * b.size());
  for (const auto& p : a.points()) {
    for (const auto& q : b.points()) {
      IntegerVector s(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) s[i] = p[i] + q[i];
      out.push_back(std::move(s));
    }
  }
  return PointSet(a.ambient_dim(), std::move(out));
}

PointSet zero_point_set(int ambient_dim) {
  return PointSet(ambient_dim, {IntegerVector(ambient_dim, Integer(0))});
}

// ---------------------------------------------------------------- Polytope

struct Polytope::Data {
  int ambient_dim = 0;
  int intrinsic_dim = 0;
  std::vector<RationalVector> vertices;
  Rational volume;
  std::vector<Halfspace> facets;
  std::vector<Hyperplane> equalities;
};

int Polytope::ambient_dim() const noexcept { return data_->ambient_dim; }
int Polytope::intrinsic_dim() const noexcept { return data_->intrinsic_dim; }
const std::vector<RationalVector>& Polytope::vertices() const noexcept { return data_->vertices; }
const Rational& Polytope::volume() const noexcept { return data_->volume; }
const std::vector<Halfspace>& Polytope::facets() const noexcept { return data_->facets; }
const std::vector<Hyperplane>& Polytope::equalities() const noexcept { return data_->equalities; }

bool Polytope::contains(const RationalVector& x) const {
  if (static_cast<int>(x.size()) != ambient_dim()) return false;
  auto eval = [&x](const IntegerVector& normal) {
    Rational s = 0;
    for (std::size_t i = 0; i < normal.size(); ++i) {
      if (normal[i] != 0) s += normal[i] * x[i];
    }
    return s;
  };
  for (const auto& h : data_->equalities) {
    if (eval(h.normal) != h.offset) return false;
  }
  for (const auto& h : data_->facets) {
    if (eval(h.normal) > h.offset) return false;
  }
  return true;
}

bool Polytope::is_lattice() const {
  return std::all_of(vertices().begin(), vertices().end(),
                     [](const RationalVector& v) { return is_integral(v); });
}

bool operator==(const Polytope& a, const Polytope& b) {
  if (a.data_ == b.data_) return true;
  return a.ambient_dim() == b.ambient_dim() && a.vertices() == b.vertices();
}

Polytope convex_hull(std::span<const RationalVector> points, int ambient_dim) {
  check_dimension(ambient_dim);
  if (points.empty()) throw DomainError("empty point set");
  std::vector<RationalVector> pts(points.begin(), points.end());
  for (const auto& p : pts) {
    if (static_cast<int>(p.size()) != ambient_dim) {
      throw DomainError("point of length " + std::to_string(p.size()) +
                        " given for ambient dimension " + std::to_string(ambient_dim));
    }
  }
  sort_unique(pts);

  detail::HullData hull = detail::compute_hull(pts, ambient_dim);

  auto data = std::make_shared<Polytope::Data>();
  data->ambient_dim = ambient_dim;
  data->intrinsic_dim = hull.intrinsic_dim;
  data->volume = std::move(hull.volume);
  data->facets = std::move(hull.facets);
  data->equalities = std::move(hull.equalities);
  std::sort(hull.vertices.begin(), hull.vertices.end());
  data->vertices.reserve(hull.vertices.size());
  for (std::size_t i : hull.vertices) data->vertices.push_back(std::move(pts[i]));
  return Polytope(std::move(data));
}

Polytope convex_hull(const PointSet& points) {
  std::vector<RationalVector> pts;
  pts.reserve(points.size());
  for (const auto& p : points.points()) pts.push_back(to_rational(p));
  return convex_hull(pts, points.ambient_dim());
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  check_same_dim(p, q);
  if (q.num_vertices() == 1 && q.vertices()[0] == RationalVector(q.ambient_dim(), Rational(0))) {
    return p;
  }
  if (p.num_vertices() == 1 && p.vertices()[0] == RationalVector(p.ambient_dim(), Rational(0))) {
    return q;
  }
  std::vector<RationalVector> sums;
  sums.reserve(p.num_vertices() * q.num_vertices());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) {
      RationalVector s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      sums.push_back(std::move(s));
    }
  }
  return convex_hull(sums, p.ambient_dim());
}

Polytope minkowski_sum(std::span<const Polytope> bodies) {
  if (bodies.empty()) throw DomainError("Minkowski sum of an empty family");
  Polytope acc = bodies.front();
  for (std::size_t i = 1; i < bodies.size(); ++i) acc = minkowski_sum(acc, bodies[i]);
  return acc;
}

Polytope dilate(const Polytope& p, const Rational& k) {
  if (k < 0) throw DomainError("negative dilation factor " + to_string(k));
  if (k == 0) return origin(p.ambient_dim());
  if (k == 1) return p;
  std::vector<RationalVector> scaled = p.vertices();
  for (auto& v : scaled) {
    for (auto& x : v) x *= k;
  }
  return convex_hull(scaled, p.ambient_dim());
}

Polytope translate(const Polytope& p, const RationalVector& t) {
  if (static_cast<int>(t.size()) != p.ambient_dim()) throw DomainError("dimension mismatch");
  std::vector<RationalVector> moved = p.vertices();
  for (auto& v : moved) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += t[i];
  }
  return convex_hull(moved, p.ambient_dim());
}

Polytope origin(int ambient_dim) {
  const RationalVector zero(ambient_dim, Rational(0));
  return convex_hull(std::span<const RationalVector>(&zero, 1), ambient_dim);
}

PointSet lattice_points(const Polytope& p) {
  const int n = p.ambient_dim();
  IntegerVector lo(n), hi(n);
  for (int j = 0; j < n; ++j) {
    Rational mn = p.vertices()[0][j], mx = mn;
    for (const auto& v : p.vertices()) {
      if (v[j] < mn) mn = v[j];
      if (v[j] > mx) mx = v[j];
    }
    mpz_cdiv_q(lo[j].get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
    mpz_fdiv_q(hi[j].get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
    if (lo[j] > hi[j]) throw DomainError("empty completion");
  }

  std::vector<IntegerVector> found;
  IntegerVector cur = lo;
  RationalVector probe(n);
  while (true) {
    for (int j = 0; j < n; ++j) probe[j] = cur[j];
    if (p.contains(probe)) found.push_back(cur);
    int j = n - 1;
    while (j >= 0 && cur[j] == hi[j]) {
      cur[j] = lo[j];
      --j;
    }
    if (j < 0) break;
    ++cur[j];
  }
  if (found.empty()) throw DomainError("empty completion");
  return PointSet(n, std::move(found));
}

PointSet completion(const PointSet& a) { return lattice_points(convex_hull(a)); }

int sum_dimension(std::span<const Polytope> bodies) {
  if (bodies.empty()) return 0;
  detail::Echelon span(bodies.front().ambient_dim());
  for (const auto& b : bodies) {
    const auto& vs = b.vertices();
    for (std::size_t i = 1; i < vs.size(); ++i) {
      RationalVector d(vs[i].size());
      for (std::size_t j = 0; j < d.size(); ++j) d[j] = vs[i][j] - vs[0][j];
      span.add(std::move(d));
      if (span.rank() == span.dim()) return span.rank();
    }
  }
  return span.rank();
}

DependenceWitness affinely_dependent(std::span<const Polytope> bodies) {
  const std::size_t k = bodies.size();
  if (k == 0) throw DomainError("affine dependence of an empty family");
  const int n = bodies.front().ambient_dim();
  for (const auto& b : bodies) check_same_dim(bodies.front(), b);
  if (static_cast<int>(k) > n) {
    throw DomainError(std::to_string(k) + " bodies exceed ambient dimension " + std::to_string(n));
  }

  // Subsets of each size in lexicographic order of their sorted index tuples.
  for (std::size_t size = 1; size <= k; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<Polytope> chosen;
      chosen.reserve(size);
      for (std::size_t i : idx) chosen.push_back(bodies[i]);
      if (sum_dimension(chosen) < static_cast<int>(size)) return {true, idx};

      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == k - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return {};
}

Polytope axis_segment(int ambient_dim, int axis, const Rational& length) {
  RationalVector a(ambient_dim, Rational(0)), b = a;
  b.at(axis) = length;
  const std::vector<RationalVector> pts{a, b};
  return convex_hull(pts, ambient_dim);
}

Polytope cube(int ambient_dim, const Rational& side) {
  std::vector<RationalVector> pts;
  for (unsigned mask = 0; mask < (1u << ambient_dim); ++mask) {
    RationalVector v(ambient_dim, Rational(0));
    for (int j = 0; j < ambient_dim; ++j) {
      if (mask & (1u << j)) v[j] = side;
    }
    pts.push_back(std::move(v));
  }
  return convex_hull(pts, ambient_dim);
}

Polytope standard_simplex(int ambient_dim, const Rational& side) {
  std::vector<RationalVector> pts{RationalVector(ambient_dim, Rational(0))};
  for (int j = 0; j < ambient_dim; ++j) {
    RationalVector v(ambient_dim, Rational(0));
    v[j] = side;
    pts.push_back(std::move(v));
  }
  return convex_hull(pts, ambient_dim);
}

}  // namespace mixvol
