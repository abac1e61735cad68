#include "mixvol/rational.hpp"

#include <doctest.h>

using namespace mixvol;

TEST_CASE("rational parsing and formatting round-trip") {
  CHECK(rat_to_string(parse_rat("3/4")) == "3/4");
  CHECK(rat_to_string(parse_rat("-6/8")) == "-3/4");
  CHECK(rat_to_string(parse_rat("5")) == "5");
  CHECK(rat_to_string(parse_rat("0/7")) == "0");
  CHECK(rat_to_string(parse_rat("+2/6")) == "1/3");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/"), std::invalid_argument);
}

TEST_CASE("integer and rational powers") {
  CHECK(int_pow(Int(3), 5) == 243);
  CHECK(int_pow(Int(2), 0) == 1);
  CHECK(rat_pow(make_rat(2, 3), 3) == make_rat(8, 27));
  CHECK(rat_pow(make_rat(2, 3), -2) == make_rat(9, 4));
  CHECK(rat_pow(Rat(7), 0) == 1);
  CHECK_THROWS_AS(rat_pow(Rat(0), -1), std::invalid_argument);
}

TEST_CASE("binomials and factorials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(10, 0) == 1);
}

TEST_CASE("exact base-2 logarithms") {
  CHECK(exact_log2(Rat(8)) == 3);
  CHECK(exact_log2(Rat(1)) == 0);
  CHECK(exact_log2(make_rat(1, 4)) == -2);
  CHECK(pow2(5) == 32);
  CHECK(pow2(-3) == make_rat(1, 8));
  CHECK_THROWS_AS(exact_log2(Rat(3)), std::invalid_argument);
  CHECK_THROWS_AS(exact_log2(Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(exact_log2(make_rat(3, 2)), std::invalid_argument);
}
