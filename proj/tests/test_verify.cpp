#include "bellgamma/verify.hpp"

#include <cmath>
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace bellgamma;

namespace {

bool all_pass(const std::vector<CheckResult>& r) {
  return !r.empty() && std::all_of(r.begin(), r.end(), [](const CheckResult& c) { return c.pass; });
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("suite list") {
    CHECK(suite_names().size() == 7);
    CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument);
  }

  TEST_CASE("small runs pass") {
    CHECK(all_pass(run_suite("lemma1", {4u, 8u})));
    CHECK(run_suite("lemma1", {4u, 8u}).size() == 3);
    CHECK(all_pass(run_suite("recurrences", {std::nullopt, 20u})));
    CHECK(all_pass(run_suite("integrality", {3u, 40u})));
    CHECK(all_pass(run_suite("bernoulli", {})));
    CHECK(all_pass(run_suite("bell", {})));
    CHECK(all_pass(run_suite("tail", {2u, 15u})));
    CHECK(all_pass(run_suite("saddle", {3u, std::nullopt})));
  }

  TEST_CASE("saddle seeds are too coarse at small n for large a") {
    // the truncated expansion misses by O(n^{-4/a}), about 0.03 for a = 8, n = 1000
    const auto r = run_suite("saddle", {8u, 1000u});
    CHECK_FALSE(all_pass(r));
    const auto failed = std::find_if(r.begin(), r.end(), [](const CheckResult& c) { return !c.pass; });
    REQUIRE(failed != r.end());
    CHECK(failed->detail.find("seed") != std::string::npos);
  }
}
