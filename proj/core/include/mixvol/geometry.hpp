#pragma once

// Ground truth with actual rational polytopes: exact convex hulls,
// Minkowski sums, normalized volumes, and mixed volumes by sub-tuple
// inclusion-exclusion. Ambient dimension is capped (default 4, override
// with MIXVOL_MAX_DIM) because one mixed volume needs a hull-and-volume
// pass per non-empty sub-multiset.

#include "mixvol/index.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace mixvol {

using Point = std::vector<Rat>;

// One facet of a full-dimensional hull; facets are kept simplicial, so a
// geometric facet may be covered by several coplanar entries.
struct Facet {
  std::vector<int> vertex_ids;  // indices into the polytope's vertex list
  Point normal;                 // outward: normal.x <= offset on the polytope
  Rat offset;
};

// A convex polytope given by its irredundant vertex list. Lower-dimensional
// sets (segments, points) are allowed and flagged via affine_dim; for those
// the facet data describes the hull inside its affine hull after projecting
// to the stored coordinate subset.
class VPolytope {
 public:
  int dim() const { return dim_; }
  int affine_dim() const { return affine_dim_; }
  bool full_dimensional() const { return affine_dim_ == dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  // u.x = rhs valid on the whole polytope; empty when full-dimensional.
  const std::vector<std::pair<Point, Rat>>& affine_hull() const { return affine_hull_; }

  bool contains(const Point& x) const;

  friend VPolytope convex_hull(const std::vector<Point>& points, int dim_cap);

 private:
  int dim_ = 0;
  int affine_dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<Facet> facets_;                       // in projected coordinates if affine_dim < dim
  std::vector<int> proj_coords_;                    // coordinate subset used for facets
  std::vector<std::pair<Point, Rat>> affine_hull_;
};

int geometry_dim_cap();  // default 4; MIXVOL_MAX_DIM overrides

VPolytope convex_hull(const std::vector<Point>& points, int dim_cap = geometry_dim_cap());
VPolytope minkowski_sum(const VPolytope& P, const VPolytope& Q);
VPolytope dilate(const VPolytope& P, const Rat& factor);
VPolytope translate(const VPolytope& P, const Point& shift);

// d! times the Euclidean volume; zero for lower-dimensional sets.
Rat normalized_volume(const VPolytope& P);

struct BodyTuple {
  enum class Role { generic, extremal, heine };
  std::vector<VPolytope> bodies;
  Role role = Role::generic;

  int dim() const { return bodies.empty() ? 0 : bodies.front().dim(); }
  int size() const { return static_cast<int>(bodies.size()); }
};

// Normalized mixed volume of a d-tuple in R^d via inclusion-exclusion over
// sub-multisets, with one volume evaluation per distinct multiplicity
// vector.
Rat mixed_volume(const BodyTuple& t);

// The full configuration of an n-tuple: value at p is the mixed volume of
// the tuple with body i repeated p_i times.
Configuration full_configuration(const BodyTuple& t);

// Exactness check of the Minkowski-sum volume expansion:
// Vol(K_1 + ... + K_n) = sum_p multinomial(p) * config(p).
bool vol_sum_identity_check(const BodyTuple& t);

// (m S, S, ..., S) with S the standard simplex: the tuple attaining
// MV = m and Vol(K_1 + ... + K_ell) = (m + ell - 1)^d.
BodyTuple extremal_tuple(int d, int m, int ell);

// Deterministic fuzz tuples: each body is the hull of points_per_body
// uniform lattice points in [0, box]^d, redrawn (bounded retries) until
// full-dimensional when required.
BodyTuple random_lattice_tuple(int d, int n, std::uint64_t seed, int box,
                               int points_per_body, bool require_full_dim);

struct HeineMatrix {
  std::array<std::array<Rat, 3>, 3> entries;
};

struct HeineReport {
  HeineMatrix matrix;
  Rat det;
  Rat minor_12, minor_13, minor_23;  // diagonal 2x2 minors
  bool satisfied = false;  // det >= 0, minors <= 0, entries symmetric non-negative
};

// Sign conditions characterizing realizable triples of planar mixed areas.
HeineReport heine_conditions(const HeineMatrix& m);

// Builds the pairwise mixed-area matrix of three planar compact convex sets
// (lower-dimensional bodies allowed) and checks the sign conditions.
HeineReport heine_check(const BodyTuple& t);

// Exact count by bounding-box enumeration with facet membership tests.
long count_lattice_points(const VPolytope& P, long cell_budget = 10'000'000);

}  // namespace mixvol
