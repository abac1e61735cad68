#include "mixvol/lp.hpp"

#include "mixvol/bounds.hpp"

#include <doctest.h>

using namespace mixvol;

namespace {

LpRow row_of(const DeltaIndex& delta, std::vector<std::pair<std::vector<int>, Rat>> coeffs,
             Rat bound, const std::string& label) {
  LpRow row;
  for (auto& [pt, c] : coeffs)
    row.coeffs.emplace_back(delta.position(IndexPoint(pt)), std::move(c));
  row.bound = std::move(bound);
  row.provenance = {RowProvenance::Kind::custom, {}, {}, label};
  return row;
}

}  // namespace

TEST_CASE("scalar programs") {
  // One variable: max x subject to x <= 3.
  LinearProgram lp(1, 1);
  const DeltaIndex& delta = lp.delta();
  lp.set_objective(IndexPoint({1}), Rat(1));
  lp.add_row(row_of(delta, {{{1}, Rat(1)}}, Rat(3), "cap"));
  const LpResult res = solve(lp);
  REQUIRE(res.status == LpStatus::optimal);
  CHECK(res.value == 3);
  CHECK(res.primal[0] == 3);
  CHECK(res.dual[0] == 1);
}

TEST_CASE("infeasible and unbounded programs") {
  {
    LinearProgram lp(1, 1);
    lp.set_objective(IndexPoint({1}), Rat(1));
    lp.add_row(row_of(lp.delta(), {{{1}, Rat(1)}}, Rat(-1), "upper"));
    lp.add_row(row_of(lp.delta(), {{{1}, Rat(-1)}}, Rat(0), "lower"));
    CHECK(solve(lp).status == LpStatus::infeasible);
  }
  {
    LinearProgram lp(1, 1);
    lp.set_objective(IndexPoint({1}), Rat(1));
    lp.add_row(row_of(lp.delta(), {{{1}, Rat(-1)}}, Rat(0), "lower"));
    CHECK(solve(lp).status == LpStatus::unbounded);
  }
  {
    // Unbounded objective over a feasible but open region in 2 variables.
    LinearProgram lp(2, 1);
    lp.set_objective(IndexPoint({1, 0}), Rat(1));
    lp.add_row(row_of(lp.delta(), {{{1, 0}, Rat(-1)}, {{0, 1}, Rat(1)}}, Rat(0), "diag"));
    lp.add_row(row_of(lp.delta(), {{{0, 1}, Rat(-1)}}, Rat(0), "lower"));
    CHECK(solve(lp).status == LpStatus::unbounded);
  }
}

TEST_CASE("equality slice pins the objective") {
  LinearProgram lp(2, 2);
  lp.set_objective(IndexPoint({1, 1}), Rat(1));
  for (const LinearInequality& li : build_af_cone(2).inequalities)
    lp.add_inequality(li, {RowProvenance::Kind::custom, {}, {}, "cone"});
  lp.add_equality_pair(IndexPoint({1, 1}), Rat(1));
  const LpResult res = solve(lp);
  REQUIRE(res.status == LpStatus::optimal);
  CHECK(res.value == 1);
}

TEST_CASE("black-box point bounds over the normalized cone slice") {
  {
    const AfBoundResult r = max_over_af(3, IndexPoint({3, 0, 0}));
    CHECK(r.value == 3);
    CHECK(verify_certificate(r.certificate, r.system, delta_index(3, 3)));
    // The derived inequality is literally "x(3,0,0) <= 3".
    CHECK(r.certificate.derived.coeffs ==
          std::map<IndexPoint, Rat>{{IndexPoint({3, 0, 0}), Rat(1)}});
    CHECK(r.certificate.derived.constant == 3);
  }
  {
    const AfBoundResult r = max_over_af(4, IndexPoint::ones(4));
    CHECK(r.value == 1);
  }
  // Full sweeps in low dimension: optimum equals the product of positive
  // coordinates at every target.
  for (int d : {2, 3}) {
    for (const IndexPoint& p : enumerate_delta(d, d)) {
      const AfBoundResult r = max_over_af(d, p);
      Rat expected(1);
      for (int c : p.coords())
        if (c > 0) expected *= c;
      CHECK(r.value == expected);
      CHECK(verify_certificate(r.certificate, r.system, delta_index(d, d)));
    }
  }
}

TEST_CASE("per-dimension maxima of the point bounds sit in the cube-root window") {
  // max over p of the coordinate product is 3^q 2^r for d = 3q + 2r, and
  // the cube of that value lies between 3^{d-2} and 3^d.
  for (int d = 2; d <= 6; ++d) {
    Int best(0);
    for (const IndexPoint& p : enumerate_delta(d, d)) best = std::max(best, af_point_bound(p));
    const auto [q, r] = three_two_split(d);
    CHECK(best == int_pow(Int(3), static_cast<unsigned long>(q)) *
                      int_pow(Int(2), static_cast<unsigned long>(r)));
    const Int cubed = best * best * best;
    CHECK(cubed >= int_pow(Int(3), static_cast<unsigned long>(d - 2)));
    CHECK(cubed <= int_pow(Int(3), static_cast<unsigned long>(d)));
  }
  // LP spot check at the d = 6 maximizer.
  CHECK(max_over_af(6, IndexPoint({3, 3, 0, 0, 0, 0})).value == 9);
}

TEST_CASE("tampered certificates fail verification") {
  AfBoundResult r = max_over_af(3, IndexPoint({3, 0, 0}));
  REQUIRE(!r.certificate.multipliers.empty());
  r.certificate.multipliers.front().second += make_rat(1, 7);
  CHECK(!verify_certificate(r.certificate, r.system, delta_index(3, 3)));

  // The empty certificate derives 0 <= 0.
  DualCertificate empty{IndexPoint({3, 0, 0}), Rat(0), {}, {}};
  empty.derived.constant = Rat(0);
  CHECK(verify_certificate(empty, r.system, delta_index(3, 3)));

  DualCertificate unknown{IndexPoint({3, 0, 0}), Rat(0), {}, {}};
  unknown.multipliers.emplace_back(RowProvenance{RowProvenance::Kind::custom, {}, {}, "missing"},
                                   Rat(1));
  CHECK_THROWS_AS(verify_certificate(unknown, r.system, delta_index(3, 3)),
                  std::invalid_argument);
}

TEST_CASE("square-system bounds in small dimension") {
  const FamilyCaps caps = FamilyCaps::defaults(3);
  // Pure concavity system scaled by the slice level.
  for (long t : {0L, 1L, 4L}) {
    const SquareBoundResult r =
        max_with_squares(3, IndexPoint({2, 1, 0}), Rat(t), {Family::af}, caps);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == 2 * t);
    CHECK(verify_certificate(*r.certificate, r.system, delta_index(3, 3)));
  }
  // Zero slice pinches every value to zero.
  const SquareBoundResult zero =
      max_with_squares(3, IndexPoint({3, 0, 0}), Rat(0), {Family::af}, caps);
  CHECK(zero.value == 0);
}

TEST_CASE("optimum as a function of the slice level is concave and monotone") {
  const FamilyCaps caps = FamilyCaps::defaults(3);
  const std::vector<Family> families{Family::af, Family::square, Family::generalized_square,
                                     Family::weak_concavity};
  const IndexPoint target({3, 0, 0});
  std::vector<Rat> values;
  for (long t : {0L, 1L, 2L, 3L}) {
    const SquareBoundResult r = max_with_squares(3, target, Rat(t), families, caps);
    REQUIRE(r.status == LpStatus::optimal);
    values.push_back(r.value);
  }
  for (std::size_t i = 0; i + 1 < values.size(); ++i) CHECK(values[i] <= values[i + 1]);
  // Midpoint concavity at the sampled levels.
  CHECK(values[1] >= (values[0] + values[2]) / 2);
  CHECK(values[2] >= (values[1] + values[3]) / 2);
}

TEST_CASE("cone implication via infeasibility of the negation") {
  const HPolyhedron cone = build_af_cone(3);
  // Every simplex-concavity linearization is a consequence of the pairwise
  // concavity rows.
  for (const MonomialInequality& mi : simplex_concavity_instances(3, FamilyCaps::unlimited()))
    CHECK(cone_implies(cone, linearize(mi)));
  // A square linearization has a positive constant; the homogeneous
  // implication test does not apply to it, but the strict reversed
  // inequality of a concavity row is not implied.
  LinearInequality reversed;
  reversed.coeffs[IndexPoint({2, 1, 0})] = Rat(2);
  reversed.coeffs[IndexPoint({3, 0, 0})] = Rat(-1);
  reversed.coeffs[IndexPoint({1, 2, 0})] = Rat(-1);
  reversed.constant = Rat(0);
  CHECK(!cone_implies(cone, reversed));
}
