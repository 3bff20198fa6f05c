#include "bellgamma/bell.hpp"
#include "bellgamma/numerics.hpp"
#include "oracles.hpp"

#include <cmath>
#include <doctest.h>

#include <array>
#include <stdexcept>

using namespace bellgamma;

TEST_SUITE("numerics") {
  TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20).get_str() == std::to_string(oracle::factorial_u64(20)));
    CHECK(factorial(20).get_str() == "2432902008176640000");
  }

  TEST_CASE("binom against Pascal's triangle") {
    CHECK(binom(4, 2) == 6);
    for (unsigned n : {0u, 1u, 7u, 30u}) CHECK(binom(n, 0) == 1);
    const auto row = oracle::pascal_row(30);
    for (unsigned k = 0; k <= 30; ++k) CHECK(binom(30, k) == row[k]);
    CHECK(binom(30, 15) == 155117520);
    CHECK_THROWS_AS(binom(3, 4), std::invalid_argument);
  }

  TEST_CASE("lcm_upto") {
    CHECK(lcm_upto(1) == 1);
    CHECK(lcm_upto(6) == 60);
    CHECK(lcm_upto(10) == 2520);
    for (unsigned n = 1; n <= 50; ++n) CHECK(lcm_upto(n) == oracle::lcm_pairwise(n));
  }

  TEST_CASE("poch") {
    CHECK(poch(Rat(1), 4) == 24);
    CHECK(poch(Rat(7, 3), 0) == 1);
    CHECK(poch(Rat(-5), 0) == 1);
    CHECK(poch(Rat(3, 2), 2) == Rat(15, 4));
    CHECK(poch(Rat(-2), 3) == 0);
  }

  TEST_CASE("make_rat canonicalizes") {
    const Rat r = make_rat(Integer(6), Integer(-4));
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(make_rat(0, 5) == 0);
    CHECK(make_rat(0, 5).get_den() == 1);
    CHECK_THROWS_AS(make_rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(make_rat(Integer(3), Integer(0)), std::domain_error);
  }

  TEST_CASE("is_integer and ipow") {
    CHECK(is_integer(Rat(4)));
    CHECK_FALSE(is_integer(Rat(1, 2)));
    CHECK(ipow(Integer(3), 4) == 81);
    CHECK(ipow(Integer(7), 0) == 1);
    CHECK(ipow(Rat(-2, 3), 3) == Rat(-8, 27));
  }

  TEST_CASE("log_abs") {
    CHECK(log_abs(Integer(1)) == doctest::Approx(0.0));
    CHECK(log_abs(Integer(-1000)) == doctest::Approx(std::log(1000.0)));
    const Integer big = factorial(400);
    // ln 400! via summation in doubles
    double s = 0;
    for (int k = 2; k <= 400; ++k) s += std::log(static_cast<double>(k));
    CHECK(log_abs(big) == doctest::Approx(s).epsilon(1e-12));
    CHECK(log_abs(Rat(1, 8)) == doctest::Approx(-std::log(8.0)));
    CHECK_THROWS_AS(log_abs(Integer(0)), std::domain_error);
  }

  TEST_CASE("bernoulli numbers") {
    const auto b = bernoulli_numbers(12);
    CHECK(b[0] == 1);
    CHECK(b[1] == Rat(-1, 2));
    CHECK(b[2] == Rat(1, 6));
    CHECK(b[3] == 0);
    CHECK(b[4] == Rat(-1, 30));
    CHECK(b[12] == Rat(-691, 2730));
  }

  TEST_CASE("partition_multinomial") {
    const std::array<unsigned, 3> k3{3, 0, 0};
    CHECK(partition_multinomial(k3, 3) == 1);
    const std::array<unsigned, 4> k4{2, 1, 0, 0};
    CHECK(partition_multinomial(k4, 4) == 6);
    const std::array<unsigned, 5> k5{0, 1, 1, 0, 0};
    CHECK(partition_multinomial(k5, 5) == 10);
    const std::array<unsigned, 3> bad{1, 0, 0};
    CHECK_THROWS_AS(partition_multinomial(bad, 3), std::invalid_argument);
  }
}
