#include "mixvol/geometry.hpp"

#include "mixvol/inequality.hpp"
#include "mixvol/lp.hpp"
#include "mixvol/rng.hpp"

#include <doctest.h>

#include <algorithm>

using namespace mixvol;

namespace {

Point pt(std::vector<long> coords) {
  Point p;
  for (long c : coords) p.push_back(Rat(c));
  return p;
}

// Membership in conv(S) by exact LP feasibility; deliberately avoids the
// hull code so it can serve as an independent oracle.
bool in_hull_lp(const std::vector<Point>& S, const Point& q) {
  const int n = static_cast<int>(S.size());
  const int dim = static_cast<int>(q.size());
  LinearProgram lp(n, 1);
  const DeltaIndex& delta = lp.delta();
  auto lambda_row = [&](int i) { return delta.position(delta.point(i)); };
  for (int c = 0; c < dim; ++c) {
    LpRow up, down;
    for (int i = 0; i < n; ++i) {
      const Rat& coeff = S[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (sgn(coeff) != 0) {
        up.coeffs.emplace_back(lambda_row(i), coeff);
        down.coeffs.emplace_back(lambda_row(i), -coeff);
      }
    }
    up.bound = q[static_cast<std::size_t>(c)];
    down.bound = -q[static_cast<std::size_t>(c)];
    up.provenance = {RowProvenance::Kind::custom, {}, {}, "coord up " + std::to_string(c)};
    down.provenance = {RowProvenance::Kind::custom, {}, {}, "coord down " + std::to_string(c)};
    lp.add_row(up);
    lp.add_row(down);
  }
  LpRow sum_up, sum_down;
  for (int i = 0; i < n; ++i) {
    sum_up.coeffs.emplace_back(lambda_row(i), Rat(1));
    sum_down.coeffs.emplace_back(lambda_row(i), Rat(-1));
  }
  sum_up.bound = Rat(1);
  sum_down.bound = Rat(-1);
  sum_up.provenance = {RowProvenance::Kind::custom, {}, {}, "sum up"};
  sum_down.provenance = {RowProvenance::Kind::custom, {}, {}, "sum down"};
  lp.add_row(sum_up);
  lp.add_row(sum_down);
  for (int i = 0; i < n; ++i) {
    LpRow nonneg;
    nonneg.coeffs.emplace_back(lambda_row(i), Rat(-1));
    nonneg.bound = Rat(0);
    nonneg.provenance = {RowProvenance::Kind::custom, {}, {}, "nonneg " + std::to_string(i)};
    lp.add_row(nonneg);
  }
  return solve(lp).status == LpStatus::optimal;
}

long count_dilate_lp(const std::vector<Point>& S, int t) {
  if (t == 0) return 1;
  const int dim = static_cast<int>(S.front().size());
  std::vector<Point> scaled;
  for (const Point& s : S) {
    Point p(s);
    for (Rat& x : p) x *= t;
    scaled.push_back(std::move(p));
  }
  std::vector<long> lo(static_cast<std::size_t>(dim), 0), hi(static_cast<std::size_t>(dim), 0);
  for (int c = 0; c < dim; ++c) {
    Rat mn = scaled[0][static_cast<std::size_t>(c)], mx = mn;
    for (const Point& p : scaled) {
      mn = std::min(mn, p[static_cast<std::size_t>(c)]);
      mx = std::max(mx, p[static_cast<std::size_t>(c)]);
    }
    lo[static_cast<std::size_t>(c)] = mn.get_num().get_si();
    hi[static_cast<std::size_t>(c)] = mx.get_num().get_si();
  }
  long count = 0;
  std::vector<long> cur(lo);
  while (true) {
    Point q;
    for (long c : cur) q.push_back(Rat(c));
    if (in_hull_lp(scaled, q)) ++count;
    std::size_t pos = 0;
    while (pos < cur.size()) {
      if (cur[pos] < hi[pos]) {
        ++cur[pos];
        break;
      }
      cur[pos] = lo[pos];
      ++pos;
    }
    if (pos == cur.size()) break;
  }
  return count;
}

// d-th finite difference of the lattice-point counting function of the
// dilates: equals the normalized volume for lattice input points.
Rat oracle_normalized_volume(const std::vector<Point>& S, int d) {
  Rat total(0);
  for (int k = 0; k <= d; ++k) {
    const Rat term = Rat(binomial(static_cast<unsigned>(d), static_cast<unsigned>(k))) *
                     Rat(count_dilate_lp(S, d - k));
    total += (k % 2 == 0) ? term : -term;
  }
  return total;
}

std::vector<Point> random_cloud(Xoshiro256& rng, int dim, int count, long box) {
  std::vector<Point> pts;
  for (int i = 0; i < count; ++i) {
    Point p;
    for (int c = 0; c < dim; ++c)
      p.push_back(Rat(static_cast<long>(rng.below(static_cast<std::uint64_t>(box) + 1))));
    pts.push_back(std::move(p));
  }
  return pts;
}

VPolytope unit_square() {
  return convex_hull({pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})});
}

VPolytope standard_simplex(int d) {
  std::vector<Point> pts{Point(static_cast<std::size_t>(d), Rat(0))};
  for (int i = 0; i < d; ++i) {
    Point e(static_cast<std::size_t>(d), Rat(0));
    e[static_cast<std::size_t>(i)] = 1;
    pts.push_back(std::move(e));
  }
  return convex_hull(pts);
}

}  // namespace

TEST_CASE("convex hull basics") {
  // Cube corners plus the center: the center is pruned.
  std::vector<Point> pts;
  for (int x = 0; x <= 1; ++x)
    for (int y = 0; y <= 1; ++y)
      for (int z = 0; z <= 1; ++z) pts.push_back(pt({x, y, z}));
  pts.push_back({make_rat(1, 2), make_rat(1, 2), make_rat(1, 2)});
  const VPolytope cube = convex_hull(pts);
  CHECK(cube.vertices().size() == 8);
  CHECK(cube.full_dimensional());
  CHECK(cube.contains({make_rat(1, 2), make_rat(1, 2), make_rat(1, 2)}));
  CHECK(!cube.contains(pt({2, 0, 0})));

  // Collinear points collapse to a segment.
  const VPolytope seg = convex_hull({pt({0, 0}), pt({1, 1}), pt({2, 2}), pt({3, 3})});
  CHECK(seg.vertices().size() == 2);
  CHECK(seg.affine_dim() == 1);
  CHECK(seg.contains(pt({2, 2})));
  CHECK(!seg.contains(pt({2, 1})));

  // A point on a facet is not a vertex.
  const VPolytope tri = convex_hull({pt({0, 0}), pt({2, 0}), pt({1, 0}), pt({0, 2})});
  CHECK(tri.vertices().size() == 3);

  const VPolytope single = convex_hull({pt({5, 5}), pt({5, 5})});
  CHECK(single.affine_dim() == 0);
  CHECK(single.vertices().size() == 1);

  CHECK_THROWS_AS(convex_hull({}), std::invalid_argument);
  CHECK_THROWS_AS(convex_hull({Point(5, Rat(0))}), std::invalid_argument);  // above the cap
}

TEST_CASE("normalized volumes") {
  CHECK(normalized_volume(standard_simplex(2)) == 1);
  CHECK(normalized_volume(standard_simplex(3)) == 1);
  CHECK(normalized_volume(standard_simplex(4)) == 1);
  std::vector<Point> cube3;
  for (int x = 0; x <= 1; ++x)
    for (int y = 0; y <= 1; ++y)
      for (int z = 0; z <= 1; ++z) cube3.push_back(pt({x, y, z}));
  CHECK(normalized_volume(convex_hull(cube3)) == 6);
  CHECK(normalized_volume(convex_hull({pt({0, 0}), pt({3, 3})})) == 0);  // lower-dimensional
}

TEST_CASE("hull volume against the lattice-counting oracle") {
  Xoshiro256 rng(1234);
  for (int trial = 0; trial < 4; ++trial) {
    const auto cloud = random_cloud(rng, 2, 9, 6);
    const VPolytope hull = convex_hull(cloud);
    if (!hull.full_dimensional()) continue;
    CHECK(normalized_volume(hull) == oracle_normalized_volume(cloud, 2));
  }
  for (int trial = 0; trial < 2; ++trial) {
    const auto cloud = random_cloud(rng, 3, 10, 3);
    const VPolytope hull = convex_hull(cloud);
    if (!hull.full_dimensional()) continue;
    CHECK(normalized_volume(hull) == oracle_normalized_volume(cloud, 3));
  }
}

TEST_CASE("minkowski sums") {
  const VPolytope square = unit_square();
  const VPolytope doubled = minkowski_sum(square, square);
  CHECK(doubled.vertices().size() == 4);
  CHECK(normalized_volume(doubled) == 8);  // 2! * 4

  const VPolytope seg = convex_hull({pt({0, 0}), pt({1, 0})});
  const VPolytope rect = minkowski_sum(square, seg);
  CHECK(normalized_volume(rect) == 4);  // 2 x 1 rectangle

  const VPolytope shifted = minkowski_sum(square, convex_hull({pt({7, 9})}));
  CHECK(shifted.vertices().front() == pt({7, 9}));
  CHECK(normalized_volume(shifted) == 2);
}

TEST_CASE("mixed volume examples") {
  const VPolytope square = unit_square();
  const VPolytope rect = minkowski_sum(square, convex_hull({pt({0, 0}), pt({1, 0})}));
  BodyTuple pair{{square, rect}, BodyTuple::Role::generic};
  CHECK(mixed_volume(pair) == 3);

  // Diagonal equals the normalized volume.
  BodyTuple diag{{standard_simplex(3), standard_simplex(3), standard_simplex(3)},
                 BodyTuple::Role::generic};
  CHECK(mixed_volume(diag) == 1);

  // Two parallel segments are degenerate.
  const VPolytope seg1 = convex_hull({pt({0, 0}), pt({2, 0})});
  const VPolytope seg2 = convex_hull({pt({1, 0}), pt({5, 0})});
  BodyTuple segs{{seg1, seg2}, BodyTuple::Role::generic};
  CHECK(mixed_volume(segs) == 0);

  // Crossing segments span the unit parallelogram.
  const VPolytope vseg = convex_hull({pt({0, 0}), pt({0, 1})});
  const VPolytope hseg = convex_hull({pt({0, 0}), pt({1, 0})});
  BodyTuple cross{{vseg, hseg}, BodyTuple::Role::generic};
  CHECK(mixed_volume(cross) == 1);
}

TEST_CASE("mixed volume properties on random tuples") {
  Xoshiro256 seeds(77);
  for (int trial = 0; trial < 6; ++trial) {
    const int d = 2 + static_cast<int>(seeds.below(2));
    BodyTuple t = random_lattice_tuple(d, d, seeds.next(), 2, d + 2, true);
    const Rat base = mixed_volume(t);
    CHECK(sgn(base) > 0);  // full-dimensional bodies give positive values

    // Symmetry under every permutation of the tuple.
    std::vector<int> order(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) order[static_cast<std::size_t>(i)] = i;
    do {
      BodyTuple permuted;
      for (int i : order) permuted.bodies.push_back(t.bodies[static_cast<std::size_t>(i)]);
      CHECK(mixed_volume(permuted) == base);
    } while (std::next_permutation(order.begin(), order.end()));

    // Translation invariance.
    BodyTuple translated = t;
    Point shift(static_cast<std::size_t>(d), Rat(3));
    translated.bodies[0] = translate(translated.bodies[0], shift);
    CHECK(mixed_volume(translated) == base);

    // Scaling in one slot.
    BodyTuple scaled = t;
    scaled.bodies[0] = dilate(scaled.bodies[0], Rat(3));
    CHECK(mixed_volume(scaled) == 3 * base);

    // Multilinearity in the first slot.
    BodyTuple other = random_lattice_tuple(d, 1, seeds.next(), 2, d + 2, true);
    BodyTuple summed = t;
    summed.bodies[0] = minkowski_sum(t.bodies[0], other.bodies[0]);
    BodyTuple replaced = t;
    replaced.bodies[0] = other.bodies[0];
    CHECK(mixed_volume(summed) == base + mixed_volume(replaced));
  }
}

TEST_CASE("full configurations") {
  // A pair in dimension 3 produces the four interpolating values.
  const VPolytope s = standard_simplex(3);
  const VPolytope big = dilate(s, Rat(2));
  BodyTuple pair{{big, s}, BodyTuple::Role::generic};
  const Configuration config = full_configuration(pair);
  CHECK(config.at(IndexPoint({3, 0})) == 8);
  CHECK(config.at(IndexPoint({2, 1})) == 4);
  CHECK(config.at(IndexPoint({1, 2})) == 2);
  CHECK(config.at(IndexPoint({0, 3})) == 1);

  // The extremal pair in dimension 2.
  const Configuration extremal = full_configuration(extremal_tuple(2, 3, 2));
  CHECK(extremal.at(IndexPoint({2, 0})) == 9);
  CHECK(extremal.at(IndexPoint({1, 1})) == 3);
  CHECK(extremal.at(IndexPoint({0, 2})) == 1);

  // Single body: the configuration is its volume.
  BodyTuple single{{dilate(standard_simplex(2), Rat(2))}, BodyTuple::Role::generic};
  const Configuration sc = full_configuration(single);
  CHECK(sc.at(IndexPoint({2})) == 4);
}

TEST_CASE("minkowski volume expansion identity") {
  Xoshiro256 seeds(4242);
  for (int trial = 0; trial < 5; ++trial) {
    BodyTuple t = random_lattice_tuple(2, 2, seeds.next(), 3, 5, true);
    CHECK(vol_sum_identity_check(t));
  }
  BodyTuple t3 = random_lattice_tuple(3, 3, 9001, 2, 5, true);
  CHECK(vol_sum_identity_check(t3));

  // The extremal triple at m = 2: both sides are (2+2)^3 = 64.
  const BodyTuple extremal = extremal_tuple(3, 2, 3);
  CHECK(vol_sum_identity_check(extremal));
  VPolytope sum = extremal.bodies[0];
  for (std::size_t i = 1; i < extremal.bodies.size(); ++i)
    sum = minkowski_sum(sum, extremal.bodies[i]);
  CHECK(normalized_volume(sum) == 64);

  BodyTuple single{{standard_simplex(2)}, BodyTuple::Role::generic};
  CHECK(vol_sum_identity_check(single));
}

TEST_CASE("extremal tuples attain the expected values") {
  for (int d = 2; d <= 3; ++d) {
    for (int m = 1; m <= 3; ++m) {
      const BodyTuple t = extremal_tuple(d, m, d);
      CHECK(mixed_volume(t) == m);
      for (int ell = 1; ell <= d; ++ell) {
        VPolytope sum = t.bodies[0];
        for (int i = 1; i < ell; ++i) sum = minkowski_sum(sum, t.bodies[static_cast<std::size_t>(i)]);
        CHECK(normalized_volume(sum) ==
              rat_pow(Rat(m + ell - 1), d));
      }
    }
  }
  CHECK_THROWS_AS(extremal_tuple(3, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(extremal_tuple(3, 1, 4), std::invalid_argument);
}

TEST_CASE("random tuples are deterministic and full-dimensional on demand") {
  const BodyTuple a = random_lattice_tuple(3, 2, 555, 2, 5, true);
  const BodyTuple b = random_lattice_tuple(3, 2, 555, 2, 5, true);
  REQUIRE(a.size() == b.size());
  for (int i = 0; i < a.size(); ++i)
    CHECK(a.bodies[static_cast<std::size_t>(i)].vertices() ==
          b.bodies[static_cast<std::size_t>(i)].vertices());
  for (const VPolytope& body : a.bodies) CHECK(body.full_dimensional());

  const BodyTuple c = random_lattice_tuple(3, 2, 556, 2, 5, true);
  bool differs = false;
  for (int i = 0; i < a.size(); ++i)
    if (a.bodies[static_cast<std::size_t>(i)].vertices() !=
        c.bodies[static_cast<std::size_t>(i)].vertices())
      differs = true;
  CHECK(differs);

  // 0/1 boxes still give full-dimensional bodies when required.
  const BodyTuple boxed = random_lattice_tuple(3, 3, 31337, 1, 6, true);
  for (const VPolytope& body : boxed.bodies) CHECK(body.full_dimensional());
}

TEST_CASE("two-body configurations of random pairs are log-concave sequences") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const BodyTuple pair = random_lattice_tuple(2, 2, seed, 3, 4, true);
    CHECK(two_body_sequence_log_concave(full_configuration(pair)));
  }
}

TEST_CASE("heine sign conditions") {
  // Two unit squares and a horizontal segment.
  const VPolytope square = unit_square();
  const VPolytope seg = convex_hull({pt({0, 0}), pt({1, 0})});
  const HeineReport geometric = heine_check({{square, square, seg}, BodyTuple::Role::heine});
  CHECK(geometric.satisfied);
  CHECK(geometric.matrix.entries[0][0] == 2);
  CHECK(geometric.matrix.entries[0][2] == 1);
  CHECK(geometric.matrix.entries[2][2] == 0);
  CHECK(geometric.det == 0);
  CHECK(geometric.minor_12 == 0);
  CHECK(geometric.minor_13 == -1);
  CHECK(geometric.minor_23 == -1);

  // The classical non-realizable matrix: determinant -1.
  HeineMatrix raw;
  const long vals[3][3] = {{1, 1, 2}, {1, 1, 1}, {2, 1, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) raw.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rat(vals[i][j]);
  const HeineReport bad = heine_conditions(raw);
  CHECK(bad.det == -1);
  CHECK(bad.minor_12 == 0);
  CHECK(bad.minor_13 == -3);
  CHECK(bad.minor_23 == 0);
  CHECK(!bad.satisfied);

  // Three copies of one body: rank one, all conditions tight.
  const HeineReport rank1 = heine_check({{square, square, square}, BodyTuple::Role::heine});
  CHECK(rank1.satisfied);
  CHECK(rank1.det == 0);
}

TEST_CASE("lattice point counting") {
  std::vector<Point> cube3;
  for (int x = 0; x <= 1; ++x)
    for (int y = 0; y <= 1; ++y)
      for (int z = 0; z <= 1; ++z) cube3.push_back(pt({x, y, z}));
  CHECK(count_lattice_points(convex_hull(cube3)) == 8);
  CHECK(count_lattice_points(dilate(standard_simplex(2), Rat(2))) == 6);
  CHECK(count_lattice_points(convex_hull({pt({0, 0}), pt({3, 0})})) == 4);  // a segment

  // Blichfeldt-style bound: count <= normalized volume + d for
  // full-dimensional lattice polytopes.
  Xoshiro256 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const auto cloud = random_cloud(rng, 2, 6, 5);
    const VPolytope hull = convex_hull(cloud);
    if (!hull.full_dimensional()) continue;
    CHECK(Rat(count_lattice_points(hull)) <= normalized_volume(hull) + 2);
  }
  CHECK_THROWS_AS(count_lattice_points(dilate(standard_simplex(3), Rat(10000))),
                  std::invalid_argument);
}

TEST_CASE("configurations of random tuples satisfy every family") {
  const FamilyCaps caps = FamilyCaps::unlimited();
  const auto fam2 = {Family::af, Family::simplex_concavity, Family::weak_concavity};
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Configuration c = full_configuration(random_lattice_tuple(2, 2, seed, 3, 4, true));
    for (Family f : fam2) CHECK(check_config(c, family_instances(f, 2, caps)).all_satisfied());
  }
  const auto fam3 = {Family::af, Family::square, Family::generalized_square,
                     Family::simplex_concavity, Family::weak_concavity};
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Configuration c = full_configuration(random_lattice_tuple(3, 3, seed, 2, 5, true));
    for (Family f : fam3) CHECK(check_config(c, family_instances(f, 3, caps)).all_satisfied());
  }
}
