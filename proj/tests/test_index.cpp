#include "mixvol/index.hpp"

#include "mixvol/json_io.hpp"
#include "mixvol/rng.hpp"

#include <doctest.h>

using namespace mixvol;

namespace {

Configuration random_config(int n, int d, Xoshiro256& rng) {
  Configuration c(n, d, Scale::logarithmic);
  for (const IndexPoint& p : c.delta().points())
    c.set(p, make_rat(static_cast<long>(rng.below(19)) - 9, static_cast<long>(rng.below(4)) + 1));
  return c;
}

}  // namespace

TEST_CASE("index simplex enumeration order and counts") {
  const auto d23 = enumerate_delta(2, 3);
  REQUIRE(d23.size() == 4);
  CHECK(d23[0].coords() == std::vector<int>{3, 0});
  CHECK(d23[1].coords() == std::vector<int>{2, 1});
  CHECK(d23[2].coords() == std::vector<int>{1, 2});
  CHECK(d23[3].coords() == std::vector<int>{0, 3});

  CHECK(enumerate_delta(3, 3).size() == 10);
  CHECK(enumerate_delta(1, 5).size() == 1);
  CHECK(enumerate_delta(1, 5)[0].coords() == std::vector<int>{5});

  for (int n = 1; n <= 8; ++n)
    for (int d = 1; d <= 8; ++d)
      CHECK(Int(static_cast<long>(enumerate_delta(n, d).size())) ==
            binomial(static_cast<unsigned>(n + d - 1), static_cast<unsigned>(d)));
}

TEST_CASE("multinomial coefficients and the multinomial theorem") {
  CHECK(multinomial(IndexPoint({1, 1, 1})) == 6);
  CHECK(multinomial(IndexPoint({3, 0, 0})) == 1);
  CHECK(multinomial(IndexPoint({2, 1, 0})) == 3);
  for (int n = 1; n <= 6; ++n)
    for (int d = 1; d <= 6; ++d) {
      Int sum(0);
      for (const IndexPoint& p : enumerate_delta(n, d)) sum += multinomial(p);
      CHECK(sum == int_pow(Int(n), static_cast<unsigned long>(d)));
    }
}

TEST_CASE("index point validation") {
  CHECK_THROWS_AS(IndexPoint({1, -1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(IndexPoint({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(IndexPoint({1, 2}, 4), std::invalid_argument);
  CHECK(IndexPoint::ones(4).coords() == std::vector<int>{1, 1, 1, 1});
  CHECK(IndexPoint::corner(3, 1).coords() == std::vector<int>{0, 3, 0});
  CHECK(IndexPoint({2, 1, 0}).max_entry() == 2);
  CHECK(IndexPoint({2, 1, 0}).support_size() == 2);
}

TEST_CASE("permutation action is a group action") {
  Xoshiro256 rng(2024);
  for (int n = 2; n <= 4; ++n) {
    const auto group = Permutation::symmetric_group(n);
    const Configuration c = random_config(n, n, rng);
    CHECK(act(Permutation::identity(n), c) == c);
    for (const auto& sigma : group)
      for (const auto& tau : group)
        CHECK(act(sigma, act(tau, c)) == act(sigma.compose(tau), c));
  }
}

TEST_CASE("coordinate swap moves values the expected way") {
  Configuration c(3, 3, Scale::multiplicative);
  c.set(IndexPoint({2, 1, 0}), Rat(5));
  const Permutation swap12({1, 0, 2});
  const Configuration moved = act(swap12, c);
  CHECK(moved.at(IndexPoint({1, 2, 0})) == 5);
  CHECK(moved.at(IndexPoint({2, 1, 0})) == 0);
}

TEST_CASE("dominates is a partial order") {
  Xoshiro256 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const Configuration a = random_config(3, 3, rng);
    const Configuration b = random_config(3, 3, rng);
    const Configuration c = random_config(3, 3, rng);
    CHECK(dominates(a, a));
    if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
    if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
  }
}

TEST_CASE("configuration json round-trip") {
  Xoshiro256 rng(7);
  const Configuration c = random_config(2, 3, rng);
  const Json j = json_of(c);
  CHECK(config_of_json(j) == c);
  CHECK(j.at("values").size() == 4);
  CHECK(j.at("values").at(0).at(0) == Json::array({3, 0}));
}

TEST_CASE("directions carry their defining shape") {
  const Direction e = Direction::elementary(4, 0, 2);
  CHECK(e.coords == std::vector<int>{1, 0, -1, 0});
  const Direction u = Direction::one_to_one(6, {0, 1, 2}, 3);
  CHECK(u.coords == std::vector<int>{1, 1, 1, -3, 0, 0});
  const Direction w = Direction::set_to_set(6, {0, 1}, {4, 5});
  CHECK(w.coords == std::vector<int>{1, 1, 0, 0, -1, -1});
  CHECK_THROWS_AS(Direction::set_to_set(4, {0, 1}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Direction::one_to_one(4, {0, 1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(Direction::set_to_set(4, {0}, {1, 2}), std::invalid_argument);
}
