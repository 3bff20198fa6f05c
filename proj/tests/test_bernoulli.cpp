#include "bellgamma/bernoulli.hpp"
#include "oracles.hpp"

#include <cmath>
#include <doctest.h>

#include <stdexcept>

using namespace bellgamma;

TEST_SUITE("bernoulli") {
  TEST_CASE("closed forms") {
    CHECK(gen_bernoulli(0, 1) == PolyQ{1});
    CHECK(gen_bernoulli(0, 7) == PolyQ{1});
    CHECK(gen_bernoulli(1, 2) == PolyQ{-1, 1});
    CHECK(gen_bernoulli(3, 4) == PolyQ::from_roots({Rat(1), Rat(2), Rat(3)}));
    CHECK(gen_bernoulli(3, 4) == PolyQ{-6, 11, -6, 1});
    // classical Bernoulli polynomials for m = 1
    CHECK(gen_bernoulli(1, 1) == PolyQ(std::vector<Rat>{Rat(-1, 2), 1}));
    CHECK(gen_bernoulli(2, 1) == PolyQ(std::vector<Rat>{Rat(1, 6), -1, 1}));
    const auto b = bernoulli_numbers(20);
    for (unsigned n = 0; n <= 20; ++n) CHECK(gen_bernoulli(n, 1)(0) == b[n]);
  }

  TEST_CASE("point values") {
    CHECK(bernoulli_at(0, 1, Rat(7, 3)) == 1);
    for (unsigned m = 2; m <= 16; m += 2) CHECK(bernoulli_at(m, m + 1, make_rat(m, 2) + 1) == 0);
    for (unsigned m = 1; m <= 6; ++m)
      for (unsigned n = 0; n <= 5; ++n) CHECK(bernoulli_at(2 * n + 1, m, make_rat(m, 2)) == 0);
  }

  TEST_CASE("ranges") {
    CHECK_THROWS_AS(gen_bernoulli(201, 1), std::out_of_range);
    CHECK_THROWS_AS(gen_bernoulli(3, 51), std::out_of_range);
    CHECK_THROWS_AS(gen_bernoulli(3, 0), std::out_of_range);
    CHECK_NOTHROW(gen_bernoulli(200, 50));
    CHECK_THROWS_AS(csc_power_coeffs(1, 51), std::out_of_range);
  }

  TEST_CASE("gen_bernoulli_all is consistent") {
    const auto all = gen_bernoulli_all(10, 3);
    REQUIRE(all.size() == 11);
    for (unsigned n = 0; n <= 10; ++n) CHECK(all[n] == gen_bernoulli(n, 3));
  }

  TEST_CASE("(z / sin z)^m") {
    const auto c1 = csc_power_coeffs(1, 3);
    CHECK(c1[0] == 1);
    CHECK(c1[1] == Rat(1, 6));
    CHECK(c1[2] == Rat(7, 360));
    CHECK(c1[3] == Rat(31, 15120));
    const auto c2 = csc_power_coeffs(2, 2);
    CHECK(c2[1] == Rat(1, 3));
    CHECK(c2[2] == Rat(1, 15));
    // square of the m = 1 series
    const auto sq = oracle::poly_mul({c1[0], 0, c1[1], 0, c1[2]}, {c1[0], 0, c1[1], 0, c1[2]}, 4);
    CHECK(sq[2] == c2[1]);
    CHECK(sq[4] == c2[2]);
    CHECK(csc_power_coeffs(3, 0) == std::vector<Rat>{1});
  }

  TEST_CASE("PolyQ basics") {
    const PolyQ p{1, 0, 0};
    CHECK(p.degree() == 0);
    CHECK(PolyQ{}.is_zero());
    CHECK(PolyQ{0, 0}.is_zero());
    CHECK((PolyQ{1, 1} * PolyQ{-1, 1}) == PolyQ{-1, 0, 1});
    CHECK(PolyQ{2, -3, 1}(Rat(1, 2)) == Rat(3, 4));
    CHECK(PolyQ{-6, 11, -6, 1}.to_string() == "x^3 - 6*x^2 + 11*x - 6");
    CHECK(PolyQ{}.to_string() == "0");
  }
}
