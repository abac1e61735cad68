#include "mixvol/geometry.hpp"

#include "mixvol/rng.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mixvol {

namespace {

// --- exact linear algebra helpers -----------------------------------------

Rat dot(const Point& a, const Point& b) {
  Rat out(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) out += a[i] * b[i];
  return out;
}

Point sub(const Point& a, const Point& b) {
  Point out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Rat det_of(std::vector<Point> rows) {
  const std::size_t k = rows.size();
  Rat det(1);
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == k) return Rat(0);
    if (pivot != col) {
      std::swap(rows[pivot], rows[col]);
      det = -det;
    }
    det *= rows[col][col];
    for (std::size_t r = col + 1; r < k; ++r) {
      if (sgn(rows[r][col]) == 0) continue;
      const Rat f = rows[r][col] / rows[col][col];
      for (std::size_t c = col; c < k; ++c) rows[r][c] -= f * rows[col][c];
    }
  }
  return det;
}

// Incremental row echelon over the rationals; tracks pivot columns.
struct Echelon {
  std::vector<Point> rows;
  std::vector<int> pivots;

  Point reduce(Point v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const int p = pivots[r];
      if (sgn(v[static_cast<std::size_t>(p)]) == 0) continue;
      const Rat f = v[static_cast<std::size_t>(p)] / rows[r][static_cast<std::size_t>(p)];
      for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * rows[r][c];
    }
    return v;
  }

  bool add(Point v) {
    v = reduce(std::move(v));
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (sgn(v[c]) != 0) {
        rows.push_back(std::move(v));
        pivots.push_back(static_cast<int>(c));
        return true;
      }
    }
    return false;
  }

  int rank() const { return static_cast<int>(rows.size()); }
};

// Outward-unoriented normal of the hyperplane through k points in R^k,
// by cofactor expansion of the (k-1) x k difference matrix.
Point hyperplane_normal(const std::vector<Point>& pts) {
  const std::size_t k = pts.front().size();
  std::vector<Point> diff;
  for (std::size_t i = 1; i < pts.size(); ++i) diff.push_back(sub(pts[i], pts[0]));
  Point normal(k, Rat(0));
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Point> minor;
    for (const Point& row : diff) {
      Point m;
      for (std::size_t c = 0; c < k; ++c)
        if (c != j) m.push_back(row[c]);
      minor.push_back(std::move(m));
    }
    Rat d = k >= 2 ? det_of(std::move(minor)) : Rat(1);
    normal[j] = (j % 2 == 0) ? d : -d;
  }
  return normal;
}

void make_primitive(Point& v) {
  Int lcm_den(1);
  for (const Rat& x : v)
    if (sgn(x) != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
  Int g(0);
  std::vector<Int> nums(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    nums[i] = v[i].get_num() * (lcm_den / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nums[i].get_mpz_t());
  }
  if (sgn(g) == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rat(nums[i] / g);
}

// --- full-dimensional hull (beneath-beyond with exact predicates) ----------

struct RawFacet {
  std::vector<int> verts;  // k point indices, affinely independent
  Point normal;            // outward, normal.x <= offset inside
  Rat offset;
};

RawFacet make_facet(const std::vector<Point>& pts, std::vector<int> verts,
                    const Point& interior) {
  std::vector<Point> corners;
  corners.reserve(verts.size());
  for (int id : verts) corners.push_back(pts[static_cast<std::size_t>(id)]);
  RawFacet f;
  f.verts = std::move(verts);
  f.normal = hyperplane_normal(corners);
  f.offset = dot(f.normal, corners.front());
  const int side = sgn(dot(f.normal, interior) - f.offset);
  if (side == 0) throw std::logic_error("hull interior point landed on a facet hyperplane");
  if (side > 0) {
    for (Rat& x : f.normal) x = -x;
    f.offset = -f.offset;
  }
  make_primitive(f.normal);
  f.offset = dot(f.normal, corners.front());
  return f;
}

// pts must have affine rank k+1 in R^k; simplex holds k+1 point indices.
std::vector<RawFacet> beneath_beyond(const std::vector<Point>& pts,
                                     const std::vector<int>& simplex) {
  const std::size_t k = pts.front().size();
  Point interior(k, Rat(0));
  for (int id : simplex)
    for (std::size_t c = 0; c < k; ++c) interior[c] += pts[static_cast<std::size_t>(id)][c];
  for (std::size_t c = 0; c < k; ++c) interior[c] /= Rat(static_cast<long>(simplex.size()));

  std::vector<RawFacet> facets;
  for (std::size_t omit = 0; omit < simplex.size(); ++omit) {
    std::vector<int> verts;
    for (std::size_t i = 0; i < simplex.size(); ++i)
      if (i != omit) verts.push_back(simplex[i]);
    facets.push_back(make_facet(pts, std::move(verts), interior));
  }

  std::set<int> used(simplex.begin(), simplex.end());
  for (int idx = 0; idx < static_cast<int>(pts.size()); ++idx) {
    if (used.count(idx)) continue;
    const Point& p = pts[static_cast<std::size_t>(idx)];
    std::vector<bool> visible(facets.size(), false);
    bool any = false;
    for (std::size_t fi = 0; fi < facets.size(); ++fi) {
      if (dot(facets[fi].normal, p) > facets[fi].offset) {
        visible[fi] = true;
        any = true;
      }
    }
    if (!any) continue;  // inside or on the current hull: never a vertex

    // Ridges: sorted (k-1)-subsets of facet vertex sets.
    std::map<std::vector<int>, std::vector<std::size_t>> ridge_owners;
    for (std::size_t fi = 0; fi < facets.size(); ++fi) {
      for (std::size_t omit = 0; omit < facets[fi].verts.size(); ++omit) {
        std::vector<int> ridge;
        for (std::size_t i = 0; i < facets[fi].verts.size(); ++i)
          if (i != omit) ridge.push_back(facets[fi].verts[i]);
        std::sort(ridge.begin(), ridge.end());
        ridge_owners[ridge].push_back(fi);
      }
    }
    std::vector<RawFacet> next;
    for (std::size_t fi = 0; fi < facets.size(); ++fi)
      if (!visible[fi]) next.push_back(facets[fi]);
    for (const auto& [ridge, owners] : ridge_owners) {
      if (owners.size() != 2) continue;
      const bool v0 = visible[owners[0]];
      const bool v1 = visible[owners[1]];
      if (v0 == v1) continue;  // not a horizon ridge
      std::vector<int> verts(ridge);
      verts.push_back(idx);
      next.push_back(make_facet(pts, std::move(verts), interior));
    }
    facets = std::move(next);
  }
  return facets;
}

// Distinct supporting hyperplanes through each corner must span R^k.
std::vector<int> filter_vertices(const std::vector<RawFacet>& facets, std::size_t k) {
  std::map<int, std::set<std::pair<std::vector<std::string>, std::string>>> planes;
  for (const RawFacet& f : facets) {
    std::vector<std::string> key;
    key.reserve(f.normal.size());
    for (const Rat& x : f.normal) key.push_back(rat_to_string(x));
    const auto plane = std::make_pair(key, rat_to_string(f.offset));
    for (int id : f.verts) planes[id].insert(plane);
  }
  std::vector<int> vertices;
  for (const auto& [id, set] : planes) {
    Echelon ech;
    int rank = 0;
    for (const auto& plane : set) {
      Point n;
      n.reserve(k);
      for (const std::string& s : plane.first) n.push_back(parse_rat(s));
      if (ech.add(std::move(n))) ++rank;
      if (rank == static_cast<int>(k)) break;
    }
    if (rank == static_cast<int>(k)) vertices.push_back(id);
  }
  return vertices;
}

struct FullDimHull {
  std::vector<int> vertex_ids;    // into the point list, sorted by point order
  std::vector<RawFacet> facets;   // vertex ids remapped to the vertex list
};

FullDimHull full_dim_hull(const std::vector<Point>& pts, const std::vector<int>& simplex) {
  const std::size_t k = pts.front().size();

  if (k == 1) {
    int lo = 0, hi = 0;
    for (int i = 1; i < static_cast<int>(pts.size()); ++i) {
      if (pts[static_cast<std::size_t>(i)][0] < pts[static_cast<std::size_t>(lo)][0]) lo = i;
      if (pts[static_cast<std::size_t>(i)][0] > pts[static_cast<std::size_t>(hi)][0]) hi = i;
    }
    FullDimHull out;
    out.vertex_ids = {std::min(lo, hi), std::max(lo, hi)};
    const int lo_pos = out.vertex_ids[0] == lo ? 0 : 1;
    const int hi_pos = 1 - lo_pos;
    out.facets.push_back({{lo_pos}, {Rat(-1)}, -pts[static_cast<std::size_t>(lo)][0]});
    out.facets.push_back({{hi_pos}, {Rat(1)}, pts[static_cast<std::size_t>(hi)][0]});
    return out;
  }

  std::vector<RawFacet> facets = beneath_beyond(pts, simplex);
  std::vector<int> verts = filter_vertices(facets, k);
  std::sort(verts.begin(), verts.end());

  if (verts.size() < pts.size()) {
    // Rebuild over the true vertex set so every facet corner is a vertex.
    std::vector<Point> vpts;
    vpts.reserve(verts.size());
    for (int id : verts) vpts.push_back(pts[static_cast<std::size_t>(id)]);
    Echelon ech;
    std::vector<int> vsimplex;
    for (int i = 0; i < static_cast<int>(vpts.size()); ++i) {
      if (vsimplex.empty()) {
        vsimplex.push_back(i);
        continue;
      }
      if (ech.add(sub(vpts[static_cast<std::size_t>(i)],
                      vpts[static_cast<std::size_t>(vsimplex[0])])))
        vsimplex.push_back(i);
      if (vsimplex.size() == k + 1) break;
    }
    if (vsimplex.size() != k + 1)
      throw std::logic_error("vertex set lost full dimension during filtering");
    facets = beneath_beyond(vpts, vsimplex);
    FullDimHull out;
    out.vertex_ids = verts;
    out.facets = std::move(facets);
    return out;
  }

  std::map<int, int> remap;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) remap[verts[static_cast<std::size_t>(i)]] = i;
  for (RawFacet& f : facets)
    for (int& id : f.verts) id = remap.at(id);
  FullDimHull out;
  out.vertex_ids = verts;
  out.facets = std::move(facets);
  return out;
}

}  // namespace

int geometry_dim_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("MIXVOL_MAX_DIM")) {
      const int v = std::atoi(env);
      if (v >= 1) return v;
    }
    return 4;
  }();
  return cap;
}

VPolytope convex_hull(const std::vector<Point>& points, int dim_cap) {
  if (points.empty()) throw std::invalid_argument("convex hull of an empty point set");
  const int dim = static_cast<int>(points.front().size());
  if (dim < 1) throw std::invalid_argument("ambient dimension must be at least 1");
  if (dim > dim_cap)
    throw std::invalid_argument("ambient dimension " + std::to_string(dim) +
                                " exceeds the cap " + std::to_string(dim_cap));
  for (const Point& p : points)
    if (static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("points of mixed dimension");

  std::vector<Point> pts(points);
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const int c = cmp(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  VPolytope out;
  out.dim_ = dim;

  // Affine basis and hull equations.
  Echelon dirs;
  std::vector<int> simplex{0};
  for (int i = 1; i < static_cast<int>(pts.size()); ++i)
    if (dirs.add(sub(pts[static_cast<std::size_t>(i)], pts[0]))) simplex.push_back(i);
  out.affine_dim_ = dirs.rank();

  if (out.affine_dim_ < dim) {
    std::set<int> pivot_cols(dirs.pivots.begin(), dirs.pivots.end());
    for (int f = 0; f < dim; ++f) {
      if (pivot_cols.count(f)) continue;
      // Nullspace vector with free coordinate f set to 1.
      Point u(static_cast<std::size_t>(dim), Rat(0));
      u[static_cast<std::size_t>(f)] = 1;
      // Solve dirs . u = 0 by back substitution over the echelon rows.
      for (int r = static_cast<int>(dirs.rows.size()) - 1; r >= 0; --r) {
        const int pc = dirs.pivots[static_cast<std::size_t>(r)];
        Rat acc(0);
        for (int c = 0; c < dim; ++c)
          if (c != pc) acc += dirs.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] *
                              u[static_cast<std::size_t>(c)];
        u[static_cast<std::size_t>(pc)] =
            -acc / dirs.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(pc)];
      }
      make_primitive(u);
      out.affine_hull_.emplace_back(u, dot(u, pts[0]));
    }
  }

  if (out.affine_dim_ == 0) {
    out.vertices_ = {pts[0]};
    return out;
  }

  out.proj_coords_.assign(dirs.pivots.begin(), dirs.pivots.end());
  std::sort(out.proj_coords_.begin(), out.proj_coords_.end());
  std::vector<Point> proj;
  proj.reserve(pts.size());
  for (const Point& p : pts) {
    Point q;
    q.reserve(out.proj_coords_.size());
    for (int c : out.proj_coords_) q.push_back(p[static_cast<std::size_t>(c)]);
    proj.push_back(std::move(q));
  }

  FullDimHull hull = full_dim_hull(proj, simplex);
  for (int id : hull.vertex_ids) out.vertices_.push_back(pts[static_cast<std::size_t>(id)]);
  for (RawFacet& f : hull.facets)
    out.facets_.push_back({std::move(f.verts), std::move(f.normal), std::move(f.offset)});
  return out;
}

bool VPolytope::contains(const Point& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw std::invalid_argument("point dimension mismatch");
  for (const auto& [u, rhs] : affine_hull_)
    if (dot(u, x) != rhs) return false;
  if (affine_dim_ == 0) return x == vertices_.front();
  Point q;
  q.reserve(proj_coords_.size());
  if (full_dimensional()) {
    q = x;
  } else {
    for (int c : proj_coords_) q.push_back(x[static_cast<std::size_t>(c)]);
  }
  for (const Facet& f : facets_)
    if (dot(f.normal, q) > f.offset) return false;
  return true;
}

VPolytope minkowski_sum(const VPolytope& P, const VPolytope& Q) {
  if (P.dim() != Q.dim()) throw std::invalid_argument("summing polytopes of different dimension");
  std::vector<Point> sums;
  sums.reserve(P.vertices().size() * Q.vertices().size());
  for (const Point& p : P.vertices())
    for (const Point& q : Q.vertices()) {
      Point s(p);
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += q[i];
      sums.push_back(std::move(s));
    }
  return convex_hull(sums);
}

VPolytope dilate(const VPolytope& P, const Rat& factor) {
  if (sgn(factor) < 0) throw std::invalid_argument("dilation factor must be non-negative");
  std::vector<Point> pts;
  pts.reserve(P.vertices().size());
  for (const Point& v : P.vertices()) {
    Point s(v);
    for (Rat& x : s) x *= factor;
    pts.push_back(std::move(s));
  }
  return convex_hull(pts);
}

VPolytope translate(const VPolytope& P, const Point& shift) {
  std::vector<Point> pts;
  for (const Point& v : P.vertices()) {
    Point s(v);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += shift[i];
    pts.push_back(std::move(s));
  }
  return convex_hull(pts);
}

Rat normalized_volume(const VPolytope& P) {
  if (!P.full_dimensional()) return Rat(0);
  const std::size_t k = static_cast<std::size_t>(P.dim());
  if (P.vertices().size() == 1) return Rat(0);
  const Point& apex = P.vertices().front();
  Rat total(0);
  for (const Facet& f : P.facets()) {
    if (std::find(f.vertex_ids.begin(), f.vertex_ids.end(), 0) != f.vertex_ids.end()) continue;
    std::vector<Point> rows;
    rows.reserve(k);
    for (int id : f.vertex_ids) rows.push_back(sub(P.vertices()[static_cast<std::size_t>(id)], apex));
    Rat d = det_of(std::move(rows));
    total += sgn(d) < 0 ? -d : d;
  }
  return total;
}

namespace {

using Multiplicity = std::vector<int>;

VPolytope weighted_sum(const std::vector<const VPolytope*>& bodies, const Multiplicity& q) {
  VPolytope acc;
  bool first = true;
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    if (q[i] == 0) continue;
    VPolytope part = q[i] == 1 ? *bodies[i] : dilate(*bodies[i], Rat(q[i]));
    acc = first ? std::move(part) : minkowski_sum(acc, part);
    first = false;
  }
  if (first) throw std::logic_error("empty weighted Minkowski sum");
  return acc;
}

class VolumeCache {
 public:
  explicit VolumeCache(std::vector<const VPolytope*> bodies) : bodies_(std::move(bodies)) {}

  const Rat& volume(const Multiplicity& q) {
    auto it = cache_.find(q);
    if (it == cache_.end())
      it = cache_.emplace(q, normalized_volume(weighted_sum(bodies_, q))).first;
    return it->second;
  }

 private:
  std::vector<const VPolytope*> bodies_;
  std::map<Multiplicity, Rat> cache_;
};

// Inclusion-exclusion over sub-multisets q <= p:
//   MV = (1/d!) sum_q (-1)^{d-|q|} prod_i C(p_i, q_i) Vol(sum_i q_i K_i).
Rat mixed_volume_of(VolumeCache& cache, const Multiplicity& p) {
  const int d = std::accumulate(p.begin(), p.end(), 0);
  Rat total(0);
  Multiplicity q(p.size(), 0);
  while (true) {
    // advance odometer
    std::size_t pos = 0;
    while (pos < q.size()) {
      if (q[pos] < p[pos]) {
        ++q[pos];
        break;
      }
      q[pos] = 0;
      ++pos;
    }
    if (pos == q.size()) break;
    const int total_q = std::accumulate(q.begin(), q.end(), 0);
    Int weight(1);
    for (std::size_t i = 0; i < q.size(); ++i)
      weight *= binomial(static_cast<unsigned>(p[i]), static_cast<unsigned>(q[i]));
    Rat term = Rat(weight) * cache.volume(q);
    if ((d - total_q) % 2 == 1) term = -term;
    total += term;
  }
  return total / Rat(factorial(static_cast<unsigned>(d)));
}

std::pair<std::vector<const VPolytope*>, Multiplicity> condense(const BodyTuple& t) {
  std::vector<const VPolytope*> distinct;
  Multiplicity mult;
  for (const VPolytope& body : t.bodies) {
    bool found = false;
    for (std::size_t i = 0; i < distinct.size(); ++i) {
      if (distinct[i]->vertices() == body.vertices()) {
        ++mult[i];
        found = true;
        break;
      }
    }
    if (!found) {
      distinct.push_back(&body);
      mult.push_back(1);
    }
  }
  return {std::move(distinct), std::move(mult)};
}

void check_tuple(const BodyTuple& t) {
  if (t.bodies.empty()) throw std::invalid_argument("empty body tuple");
  const int d = t.dim();
  if (d > geometry_dim_cap())
    throw std::invalid_argument("tuple dimension exceeds the geometry cap");
  for (const VPolytope& body : t.bodies)
    if (body.dim() != d) throw std::invalid_argument("tuple bodies of mixed dimension");
}

}  // namespace

Rat mixed_volume(const BodyTuple& t) {
  check_tuple(t);
  if (t.size() != t.dim())
    throw std::invalid_argument("mixed volume needs exactly d bodies in R^d");
  auto [bodies, mult] = condense(t);
  VolumeCache cache(bodies);
  return mixed_volume_of(cache, mult);
}

Configuration full_configuration(const BodyTuple& t) {
  check_tuple(t);
  const int n = t.size();
  const int d = t.dim();
  std::vector<const VPolytope*> bodies;
  for (const VPolytope& body : t.bodies) bodies.push_back(&body);
  VolumeCache cache(bodies);
  Configuration config(n, d, Scale::multiplicative);
  for (const IndexPoint& p : config.delta().points())
    config.set(p, mixed_volume_of(cache, p.coords()));
  return config;
}

bool vol_sum_identity_check(const BodyTuple& t) {
  check_tuple(t);
  const Configuration config = full_configuration(t);
  std::vector<const VPolytope*> bodies;
  Multiplicity all;
  for (const VPolytope& body : t.bodies) {
    bodies.push_back(&body);
    all.push_back(1);
  }
  const Rat lhs = normalized_volume(weighted_sum(bodies, all));
  Rat rhs(0);
  for (const IndexPoint& p : config.delta().points())
    rhs += Rat(multinomial(p)) * config.at(p);
  return lhs == rhs;
}

BodyTuple extremal_tuple(int d, int m, int ell) {
  if (d < 1 || d > geometry_dim_cap())
    throw std::invalid_argument("dimension out of range for extremal tuple");
  if (m < 1) throw std::invalid_argument("extremal tuple needs m >= 1");
  if (ell < 1 || ell > d) throw std::invalid_argument("extremal tuple needs 1 <= ell <= d");
  std::vector<Point> simplex_pts{Point(static_cast<std::size_t>(d), Rat(0))};
  for (int i = 0; i < d; ++i) {
    Point e(static_cast<std::size_t>(d), Rat(0));
    e[static_cast<std::size_t>(i)] = 1;
    simplex_pts.push_back(std::move(e));
  }
  const VPolytope simplex = convex_hull(simplex_pts);
  BodyTuple t;
  t.role = BodyTuple::Role::extremal;
  t.bodies.push_back(dilate(simplex, Rat(m)));
  for (int i = 1; i < d; ++i) t.bodies.push_back(simplex);
  return t;
}

BodyTuple random_lattice_tuple(int d, int n, std::uint64_t seed, int box, int points_per_body,
                               bool require_full_dim) {
  if (d < 1 || d > geometry_dim_cap()) throw std::invalid_argument("dimension out of range");
  if (n < 1) throw std::invalid_argument("tuple length must be positive");
  if (box < 1 || points_per_body < 1)
    throw std::invalid_argument("box and point count must be positive");
  Xoshiro256 rng(seed);
  BodyTuple t;
  for (int body = 0; body < n; ++body) {
    bool accepted = false;
    for (int attempt = 0; attempt < 256 && !accepted; ++attempt) {
      std::vector<Point> pts;
      for (int k = 0; k < points_per_body; ++k) {
        Point p;
        p.reserve(static_cast<std::size_t>(d));
        for (int c = 0; c < d; ++c)
          p.push_back(Rat(static_cast<long>(rng.below(static_cast<std::uint64_t>(box) + 1))));
        pts.push_back(std::move(p));
      }
      VPolytope hull = convex_hull(pts);
      if (!require_full_dim || hull.full_dimensional()) {
        t.bodies.push_back(std::move(hull));
        accepted = true;
      }
    }
    if (!accepted)
      throw std::runtime_error("could not draw a full-dimensional body after 256 attempts");
  }
  return t;
}

namespace {

Rat det3(const HeineMatrix& m) {
  const auto& e = m.entries;
  return e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1]) -
         e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0]) +
         e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]);
}

}  // namespace

HeineReport heine_conditions(const HeineMatrix& m) {
  HeineReport report;
  report.matrix = m;
  const auto& e = m.entries;
  report.det = det3(m);
  report.minor_12 = e[0][0] * e[1][1] - e[0][1] * e[1][0];
  report.minor_13 = e[0][0] * e[2][2] - e[0][2] * e[2][0];
  report.minor_23 = e[1][1] * e[2][2] - e[1][2] * e[2][1];
  bool ok = sgn(report.det) >= 0 && sgn(report.minor_12) <= 0 && sgn(report.minor_13) <= 0 &&
            sgn(report.minor_23) <= 0;
  for (int i = 0; i < 3 && ok; ++i)
    for (int j = 0; j < 3 && ok; ++j) {
      if (sgn(e[i][j]) < 0) ok = false;
      if (e[i][j] != e[j][i]) ok = false;
    }
  report.satisfied = ok;
  return report;
}

HeineReport heine_check(const BodyTuple& t) {
  if (t.size() != 3 || t.dim() != 2)
    throw std::invalid_argument("heine check needs three planar bodies");
  HeineMatrix m;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      BodyTuple pair;
      pair.bodies = {t.bodies[static_cast<std::size_t>(i)], t.bodies[static_cast<std::size_t>(j)]};
      const Rat mv = mixed_volume(pair);
      m.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mv;
      m.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = mv;
    }
  return heine_conditions(m);
}

long count_lattice_points(const VPolytope& P, long cell_budget) {
  const int d = P.dim();
  if (d > 3) throw std::invalid_argument("lattice counting is limited to dimension 3");
  std::vector<long> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
  for (int c = 0; c < d; ++c) {
    Rat mn = P.vertices().front()[static_cast<std::size_t>(c)];
    Rat mx = mn;
    for (const Point& v : P.vertices()) {
      mn = std::min(mn, v[static_cast<std::size_t>(c)]);
      mx = std::max(mx, v[static_cast<std::size_t>(c)]);
    }
    Int lo_int, hi_int;
    mpz_cdiv_q(lo_int.get_mpz_t(), mn.get_num().get_mpz_t(), mn.get_den().get_mpz_t());
    mpz_fdiv_q(hi_int.get_mpz_t(), mx.get_num().get_mpz_t(), mx.get_den().get_mpz_t());
    if (!lo_int.fits_slong_p() || !hi_int.fits_slong_p())
      throw std::invalid_argument("bounding box out of range");
    lo[static_cast<std::size_t>(c)] = lo_int.get_si();
    hi[static_cast<std::size_t>(c)] = hi_int.get_si();
  }
  long cells = 1;
  for (int c = 0; c < d; ++c) {
    const long w = hi[static_cast<std::size_t>(c)] - lo[static_cast<std::size_t>(c)] + 1;
    if (w <= 0) return 0;
    if (w > cell_budget / cells) throw std::invalid_argument("bounding box exceeds the cell budget");
    cells *= w;
  }
  long count = 0;
  std::vector<long> cur(lo);
  while (true) {
    Point x;
    x.reserve(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c) x.push_back(Rat(cur[static_cast<std::size_t>(c)]));
    if (P.contains(x)) ++count;
    int pos = 0;
    while (pos < d) {
      if (cur[static_cast<std::size_t>(pos)] < hi[static_cast<std::size_t>(pos)]) {
        ++cur[static_cast<std::size_t>(pos)];
        break;
      }
      cur[static_cast<std::size_t>(pos)] = lo[static_cast<std::size_t>(pos)];
      ++pos;
    }
    if (pos == d) break;
  }
  return count;
}

}  // namespace mixvol
