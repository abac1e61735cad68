#pragma once

// H-representations over the rationals and exact vertex enumeration via the
// double description method, plus the symmetric-group orbit machinery used
// to compress vertex sets. Everything is exact; vertices come back in one
// canonical order so golden-file comparisons are byte-stable.

#include "mixvol/inequality.hpp"

#include <optional>
#include <vector>

namespace mixvol {

struct LinearEquation {
  std::map<IndexPoint, Rat> coeffs;
  Rat rhs;
};

// Inequalities a.x <= b and equations e.x = f over the variables x(p),
// p in Delta_{n,d}.
struct HPolyhedron {
  int n = 0;
  int d = 0;
  std::vector<LinearInequality> inequalities;
  std::vector<LinearEquation> equalities;
};

// The cone of log-configurations cut out by corner non-negativity and all
// linearized pairwise log-concavity relations: exactly d corner rows plus
// the rows of gen_af(d).
HPolyhedron build_af_cone(int d);

// Adds the normalization equation x(1,...,1) = level.
HPolyhedron slice(HPolyhedron cone, const Rat& level);

struct VertexSet {
  bool feasible = true;
  bool pointed = true;                  // false iff a lineality space remains
  std::vector<Configuration> vertices;  // logarithmic scale, canonical order
  std::vector<Configuration> rays;      // primitive integer recession directions
  std::vector<Configuration> lineality; // basis, only when not pointed
};

// Exact vertex/ray enumeration. Inequalities are inserted in lexicographic
// order of their dense coefficient rows, which fixes the whole run.
VertexSet enumerate_vertices(const HPolyhedron& h);

struct Orbit {
  Configuration representative;         // lexicographically minimal member
  std::vector<Configuration> members;   // canonical order, closed under S_d
};

// Partitions vertices into orbits of the coordinate-permuting S_d action;
// orbits sorted by representative.
std::vector<Orbit> orbit_decomposition(const VertexSet& vs, int d);

// Vertices maximal under the component-wise partial order. Monotone convex
// objectives attain their maximum on these.
std::vector<Configuration> dominance_maxima(const VertexSet& vs);

// Frozen reference data: the seven orbit generators of the AF_3 vertex set
// together with their orbit sizes (1 + 6 + 3 + 6 + 3 + 3 + 2 = 24 vertices).
struct Af3Reference {
  std::vector<Configuration> generators;
  std::vector<int> orbit_sizes;
};
const Af3Reference& af3_reference();

// Facets-from-vertices via the polar cone; used to round-trip V- and
// H-representations in validation. Returns inequalities plus the affine
// hull equations when the polytope is not full-dimensional.
HPolyhedron polytope_hrep(const std::vector<Configuration>& vertices,
                          const std::vector<Configuration>& rays);

}  // namespace mixvol
