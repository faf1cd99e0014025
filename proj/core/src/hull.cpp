#include "hull.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "linalg.hpp"

namespace mixvol::detail {

namespace {

struct Facet {
  std::vector<int> verts;  // sorted point indices, k of them
  IntegerVector normal;    // primitive, pointing outward
  Integer offset;          // normal . v for any vertex v
  std::vector<int> outside;
  bool alive = true;
};

// Quickhull on integer points in full dimension k >= 2. Every facet is a
// simplex; coplanar points are never considered visible, so the cones
// conv(p, F) over visible facets F form a placing triangulation of the hull.
class Quickhull {
 public:
  Quickhull(const std::vector<IntegerVector>& pts, int k, const std::vector<int>& simplex)
      : pts_(pts), k_(k), interior_(k, Integer(0)) {
    for (int s : simplex) {
      for (int j = 0; j < k_; ++j) interior_[j] += pts_[s][j];
    }
    interior_scale_ = static_cast<long>(simplex.size());

    volume_ = abs_det_with_apex({simplex.begin() + 1, simplex.end()}, simplex[0]);
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      std::vector<int> verts;
      for (std::size_t j = 0; j < simplex.size(); ++j) {
        if (j != i) verts.push_back(simplex[j]);
      }
      make_facet(std::move(verts));
    }

    std::vector<bool> in_simplex(pts_.size(), false);
    for (int s : simplex) in_simplex[s] = true;
    std::vector<int> rest;
    for (int i = 0; i < static_cast<int>(pts_.size()); ++i) {
      if (!in_simplex[i]) rest.push_back(i);
    }
    std::vector<int> created(facets_.size());
    for (std::size_t i = 0; i < created.size(); ++i) created[i] = static_cast<int>(i);
    assign(rest, created);
  }

  void run() {
    while (true) {
      int current = -1;
      while (!work_.empty()) {
        const int f = work_.back();
        if (facets_[f].alive && !facets_[f].outside.empty()) {
          current = f;
          break;
        }
        work_.pop_back();
      }
      if (current < 0) break;
      insert(furthest(facets_[current]));
    }
  }

  const Integer& volume() const { return volume_; }

  std::vector<const Facet*> alive_facets() const {
    std::vector<const Facet*> out;
    for (const auto& f : facets_) {
      if (f.alive) out.push_back(&f);
    }
    return out;
  }

 private:
  int make_facet(std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    Facet f;
    f.normal.assign(k_, Integer(0));
    const IntegerVector& base = pts_[verts[0]];
    std::vector<IntegerVector> diffs(k_ - 1, IntegerVector(k_));
    for (int i = 1; i < k_; ++i) {
      for (int j = 0; j < k_; ++j) diffs[i - 1][j] = pts_[verts[i]][j] - base[j];
    }
    std::vector<IntegerVector> minor(k_ - 1, IntegerVector(k_ - 1));
    for (int col = 0; col < k_; ++col) {
      for (int r = 0; r < k_ - 1; ++r) {
        int c2 = 0;
        for (int j = 0; j < k_; ++j) {
          if (j != col) minor[r][c2++] = diffs[r][j];
        }
      }
      Integer d = determinant(minor);
      f.normal[col] = (col % 2 == 0) ? d : Integer(-d);
    }
    make_primitive(f.normal);
    f.offset = dot(f.normal, base);
    const Integer side = dot(f.normal, interior_) - f.offset * interior_scale_;
    assert(side != 0);
    if (side > 0) {
      for (auto& x : f.normal) x = -x;
      f.offset = -f.offset;
    }
    f.verts = std::move(verts);
    facets_.push_back(std::move(f));
    return static_cast<int>(facets_.size()) - 1;
  }

  bool sees(const Facet& f, int p) const { return dot(f.normal, pts_[p]) > f.offset; }

  void assign(const std::vector<int>& candidates, const std::vector<int>& targets) {
    for (int p : candidates) {
      for (int t : targets) {
        if (sees(facets_[t], p)) {
          facets_[t].outside.push_back(p);
          break;
        }
      }
    }
    for (int t : targets) {
      if (!facets_[t].outside.empty()) work_.push_back(t);
    }
  }

  int furthest(const Facet& f) const {
    int best = f.outside.front();
    Integer best_val = dot(f.normal, pts_[best]);
    for (std::size_t i = 1; i < f.outside.size(); ++i) {
      Integer v = dot(f.normal, pts_[f.outside[i]]);
      if (v > best_val) {
        best_val = std::move(v);
        best = f.outside[i];
      }
    }
    return best;
  }

  void insert(int p) {
    std::vector<int> visible;
    for (int i = 0; i < static_cast<int>(facets_.size()); ++i) {
      if (facets_[i].alive && sees(facets_[i], p)) visible.push_back(i);
    }
    assert(!visible.empty());

    std::map<std::vector<int>, int> ridge_count;
    std::vector<int> orphans;
    for (int v : visible) {
      Facet& f = facets_[v];
      volume_ += abs_det_with_apex(f.verts, p);
      for (int i = 0; i < k_; ++i) {
        std::vector<int> ridge;
        ridge.reserve(k_ - 1);
        for (int j = 0; j < k_; ++j) {
          if (j != i) ridge.push_back(f.verts[j]);
        }
        ++ridge_count[ridge];
      }
      for (int q : f.outside) {
        if (q != p) orphans.push_back(q);
      }
      f.alive = false;
      f.outside.clear();
      f.outside.shrink_to_fit();
    }

    std::vector<int> created;
    for (const auto& [ridge, count] : ridge_count) {
      if (count != 1) continue;
      std::vector<int> verts = ridge;
      verts.push_back(p);
      created.push_back(make_facet(std::move(verts)));
    }
    assign(orphans, created);
  }

  Integer abs_det_with_apex(const std::vector<int>& verts, int apex) {
    std::vector<IntegerVector> rows;
    rows.reserve(verts.size());
    for (int v : verts) {
      IntegerVector r(k_);
      for (int j = 0; j < k_; ++j) r[j] = pts_[v][j] - pts_[apex][j];
      rows.push_back(std::move(r));
    }
    return abs(determinant(std::move(rows)));
  }

  const std::vector<IntegerVector>& pts_;
  int k_;
  IntegerVector interior_;
  long interior_scale_ = 1;
  Integer volume_ = 0;
  std::vector<Facet> facets_;
  std::vector<int> work_;
};

Integer common_denominator(const std::vector<RationalVector>& points) {
  Integer lcm = 1;
  for (const auto& p : points) {
    for (const auto& x : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  return lcm;
}

}  // namespace

HullData compute_hull(const std::vector<RationalVector>& points, int dim) {
  HullData out;
  const Integer scale = common_denominator(points);
  std::vector<IntegerVector> scaled;
  scaled.reserve(points.size());
  for (const auto& p : points) {
    IntegerVector v(dim);
    for (int j = 0; j < dim; ++j) {
      const Rational s = p[j] * scale;
      v[j] = s.get_num();
    }
    scaled.push_back(std::move(v));
  }

  Echelon directions(dim);
  std::vector<int> simplex{0};
  for (std::size_t i = 1; i < scaled.size() && directions.rank() < dim; ++i) {
    IntegerVector diff(dim);
    for (int j = 0; j < dim; ++j) diff[j] = scaled[i][j] - scaled[0][j];
    if (directions.add(diff)) simplex.push_back(static_cast<int>(i));
  }
  const int k = directions.rank();
  out.intrinsic_dim = k;

  for (auto& normal : directions.orthogonal_complement()) {
    Rational offset(dot(normal, scaled[0]), scale);
    offset.canonicalize();
    out.equalities.push_back({std::move(normal), std::move(offset)});
  }

  if (k == 0) {
    out.vertices = {0};
    return out;
  }

  std::vector<int> cols = directions.pivots();
  std::sort(cols.begin(), cols.end());

  if (k == 1) {
    const int c = cols[0];
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < scaled.size(); ++i) {
      if (scaled[i][c] < scaled[lo][c]) lo = i;
      if (scaled[i][c] > scaled[hi][c]) hi = i;
    }
    out.vertices = {lo, hi};
    IntegerVector up(dim, Integer(0)), down(dim, Integer(0));
    up[c] = 1;
    down[c] = -1;
    Rational hi_off(scaled[hi][c], scale), lo_off(-scaled[lo][c], scale);
    hi_off.canonicalize();
    lo_off.canonicalize();
    out.facets.push_back({std::move(down), std::move(lo_off)});
    out.facets.push_back({std::move(up), std::move(hi_off)});
    if (dim == 1) out.volume = points[hi][0] - points[lo][0];
    return out;
  }

  std::vector<IntegerVector> projected;
  projected.reserve(scaled.size());
  for (const auto& v : scaled) {
    IntegerVector q(k);
    for (int j = 0; j < k; ++j) q[j] = v[cols[j]];
    projected.push_back(std::move(q));
  }

  Quickhull qh(projected, k, simplex);
  qh.run();
  const auto facets = qh.alive_facets();

  // Merge coplanar simplicial facets into true facets.
  std::map<IntegerVector, int, LexLess> plane_ids;
  std::vector<const Facet*> planes;
  std::map<int, std::set<int>> incident;  // point -> plane ids
  for (const Facet* f : facets) {
    IntegerVector key = f->normal;
    key.push_back(f->offset);
    auto [it, inserted] = plane_ids.emplace(std::move(key), static_cast<int>(planes.size()));
    if (inserted) planes.push_back(f);
    for (int v : f->verts) incident[v].insert(it->second);
  }

  for (const auto& [point, ids] : incident) {
    Echelon normals(k);
    for (int id : ids) {
      normals.add(planes[id]->normal);
      if (normals.rank() == k) break;
    }
    if (normals.rank() == k) out.vertices.push_back(static_cast<std::size_t>(point));
  }

  for (const Facet* f : planes) {
    IntegerVector lifted(dim, Integer(0));
    for (int j = 0; j < k; ++j) lifted[cols[j]] = f->normal[j];
    Rational offset(f->offset, scale);
    offset.canonicalize();
    out.facets.push_back({std::move(lifted), std::move(offset)});
  }

  if (k == dim) {
    Integer denom = factorial(static_cast<unsigned>(dim));
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(dim));
    denom *= power;
    out.volume = ratio(qh.volume(), denom);
  }
  return out;
}

}  // namespace mixvol::detail
