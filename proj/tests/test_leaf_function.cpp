#include <doctest.h>

#include <algorithm>
#include <climits>

#include "p2flis/leaf_function.hpp"

using namespace p2flis;

TEST_CASE("leaf function values") {
  CHECK(leaf_function(0) == 0);
  CHECK(leaf_function(1) == 0);
  CHECK(leaf_function(2) == 2);
  CHECK(leaf_function(17) == 9);
  CHECK(leaf_function(18) == 10);
  CHECK(leaf_function(19) == 10);
  CHECK(leaf_function(35) == 18);
  for (std::int64_t n = 1; n <= 10000; ++n) CHECK(leaf_function(n) >= leaf_function(n - 1));
}

TEST_CASE("upper line intercept from the maximisation oracle") {
  // intercept = max over n of L(n) - 8n/17, found by scanning
  std::int64_t best = INT64_MIN;
  for (std::int64_t n = 0; n <= 10000; ++n) best = std::max(best, 17 * leaf_function(n) - 8 * n);
  CHECK(best == 26);
  for (std::int64_t n = 0; n <= 10000; ++n) CHECK(Rational::make(leaf_function(n), 1) <= leaf_function_upper_line(n));
  CHECK(leaf_function_upper_line(18) == Rational{10, 1});
  CHECK(leaf_function_upper_line(35) == Rational{18, 1});
  CHECK(is_saturated(18));
  CHECK_FALSE(is_saturated(17));
  CHECK(is_saturated(35));
  CHECK(is_saturated(52));
}
