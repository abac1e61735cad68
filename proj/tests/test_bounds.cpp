#include "mixvol/bounds.hpp"

#include <doctest.h>

using namespace mixvol;

TEST_CASE("admissible paths follow the canonical recursion") {
  {
    const AdmissiblePath path = admissible_path(IndexPoint({2, 2, 2, 0, 0, 0}));
    REQUIRE(path.points.size() == 2);
    CHECK(path.points[0] == IndexPoint::ones(6));
    CHECK(path.points[1] == IndexPoint({2, 2, 2, 0, 0, 0}));
    REQUIRE(path.steps.size() == 1);
    CHECK(path.steps[0].coords == std::vector<int>{1, 1, 1, -1, -1, -1});
  }
  {
    const AdmissiblePath path = admissible_path(IndexPoint({3, 2, 1, 0, 0, 0}));
    REQUIRE(path.points.size() == 3);
    CHECK(path.points[1] == IndexPoint({2, 2, 1, 1, 0, 0}));
    CHECK(path.steps[0].coords == std::vector<int>{1, 1, 0, 0, -1, -1});
    CHECK(path.steps[1].coords == std::vector<int>{1, 0, 0, -1, 0, 0});
  }
  {
    const AdmissiblePath path = admissible_path(IndexPoint::ones(4));
    CHECK(path.points.size() == 1);
    CHECK(path.steps.empty());
  }
  CHECK_THROWS_AS(admissible_path(IndexPoint({1, 2, 0})), std::invalid_argument);
}

TEST_CASE("admissible paths exist for every target up to d = 8") {
  for (int d = 3; d <= 8; ++d) {
    for (const IndexPoint& p : enumerate_delta(d, d)) {
      std::vector<int> sorted(p.coords());
      std::sort(sorted.rbegin(), sorted.rend());
      const IndexPoint target(sorted, d);
      const AdmissiblePath path = admissible_path(target);
      CHECK(static_cast<int>(path.points.size()) == target.max_entry());
      // Each step increments a leading equal block and clears a trailing
      // block of parked ones of the same size.
      for (std::size_t s = 0; s < path.steps.size(); ++s) {
        const IndexPoint& a = path.points[s];
        const Direction& v = path.steps[s];
        const int block = static_cast<int>(v.from.size());
        for (int i = 0; i < block; ++i) {
          CHECK(v.from[static_cast<std::size_t>(i)] == i);
          CHECK(a[i] == a[0]);
        }
        for (int j : v.to) CHECK(a[j] == 1);
        CHECK(v.to.back() < d);
        CHECK(v.to.front() >= block);  // the parameter l is at least the block size
        CHECK(a.shifted(v.coords) == path.points[s + 1]);
      }
    }
  }
}

TEST_CASE("single step bounds") {
  {
    const auto sb = step_bound(IndexPoint::ones(6), Direction::set_to_set(6, {0, 1, 2}, {3, 4, 5}));
    CHECK(sb.factor == 2);
    CHECK(sb.additive == 6);
    CHECK(sb.mu == 1);
  }
  {
    // mu = 2 on the incremented block: factor 3/2, additive 3 * C(3,2) = 9.
    const auto sb = step_bound(IndexPoint({2, 2, 1, 1, 0, 0}), Direction::set_to_set(6, {0}, {3}));
    CHECK(sb.factor == make_rat(3, 2));
    CHECK(sb.additive == 9);
  }
  {
    const auto sb = step_bound(IndexPoint::ones(4), Direction::set_to_set(4, {0}, {1}));
    CHECK(sb.factor == 2);
    CHECK(sb.additive == 2);  // (mu+1) * C(2,2... floor(4/2) = 2 -> C(2,2) = 1
  }
  CHECK_THROWS_AS(step_bound(IndexPoint({3, 0, 0}), Direction::set_to_set(3, {0}, {1})),
                  std::invalid_argument);
}

TEST_CASE("composed bound certificates telescope to the closed form") {
  {
    const BoundCertificate cert = certify_sq_bound(IndexPoint({2, 2, 2, 0, 0, 0}));
    CHECK(cert.slope == 2);
    CHECK(cert.constant == 6);
    CHECK(cert.chain.size() == 1);
  }
  {
    const BoundCertificate cert = certify_sq_bound(IndexPoint({3, 2, 1, 0, 0, 0}));
    CHECK(cert.slope == 3);
    CHECK(cert.constant == 18);
  }
  {
    const BoundCertificate cert = certify_sq_bound(IndexPoint::ones(5));
    CHECK(cert.slope == 1);
    CHECK(cert.constant == 0);
    CHECK(cert.chain.empty());
  }
  {
    // Unsorted targets are certified through the recorded permutation.
    const BoundCertificate cert = certify_sq_bound(IndexPoint({0, 3, 1, 2, 0, 0}));
    CHECK(cert.slope == 3);
    CHECK(cert.constant == 18);
    CHECK(cert.sort_permutation[0] == 1);
  }
  // The chain replay identity over every target for d <= 8.
  for (int d = 2; d <= 8; ++d) {
    const Rat half_choose(static_cast<long>((d / 2) * (d / 2 - 1) / 2));
    for (const IndexPoint& p : enumerate_delta(d, d)) {
      const BoundCertificate cert = certify_sq_bound(p);
      const long mx = p.max_entry();
      CHECK(cert.slope == mx);
      CHECK(cert.constant == Rat(mx) * Rat(mx - 1) * half_choose);
    }
  }
}

TEST_CASE("black-box point bound") {
  CHECK(af_point_bound(IndexPoint({2, 1, 0})) == 2);
  CHECK(af_point_bound(IndexPoint({3, 3, 0, 0, 0, 0})) == 9);
  CHECK(af_point_bound(IndexPoint::ones(7)) == 1);
  CHECK(af_point_bound(IndexPoint({4, 0, 0, 0})) == 4);
}

TEST_CASE("closed-form Minkowski-sum bounds") {
  CHECK(three_two_split(2) == std::pair<int, int>{0, 1});
  CHECK(three_two_split(3) == std::pair<int, int>{1, 0});
  CHECK(three_two_split(5) == std::pair<int, int>{1, 1});
  CHECK(three_two_split(7) == std::pair<int, int>{1, 2});

  CHECK(mink_bound_form(3, BoundMethod::af).exponent == 3);
  CHECK(mink_bound_form(3, BoundMethod::af).coefficient == 27);
  CHECK(mink_bound(3, Rat(2), BoundMethod::af) == 27 * 8);

  // floor(3/2) = 1 gives an empty square correction in d = 3.
  CHECK(mink_bound_form(3, BoundMethod::square).coefficient == 27);
  CHECK(mink_bound_form(3, BoundMethod::square).exponent == 3);

  // The exponents cross between the two methods at d = 5.
  CHECK(mink_bound_form(5, BoundMethod::af).exponent == 6);
  CHECK(mink_bound_form(5, BoundMethod::square).exponent == 5);
  CHECK(mink_bound_form(5, BoundMethod::square).coefficient ==
        int_pow(Int(2), 20) * int_pow(Int(5), 5));

  CHECK(mink_bound(2, Rat(3), BoundMethod::af) == 9 * 4);
  CHECK_THROWS_AS(mink_bound(3, make_rat(1, 2), BoundMethod::af), std::invalid_argument);
}

TEST_CASE("spike configuration values") {
  const Configuration f = counterexample_config(4);
  CHECK(f.at(IndexPoint::ones(4)) == 3);
  CHECK(f.at(IndexPoint({4, 0, 0, 0})) == 1);
  CHECK(f.at(IndexPoint({2, 1, 1, 0})) == 1);
  CHECK_THROWS_AS(counterexample_config(2), std::invalid_argument);
}
