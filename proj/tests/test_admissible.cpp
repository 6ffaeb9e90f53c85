#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "entangle/admissible.hpp"

using namespace entangle;

TEST_CASE("is_admissible examples") {
  CHECK(is_admissible({3, 3, 3}, 2, 2, 2));
  CHECK(is_admissible({3, 3, 3}, 3, 3, 3));
  CHECK(is_admissible({3, 3, 3}, 0, 0, 0));
  CHECK_FALSE(is_admissible({2, 2, 2}, 2, 2, 1));
  CHECK_FALSE(is_admissible({2, 2, 2}, -1, 0, 0));
  CHECK_FALSE(is_admissible({2, 2, 2}, 3, 2, 2));
}

TEST_CASE("enumerate_admissible at tiny dims") {
  auto one = enumerate_admissible({1, 1, 1});
  REQUIRE(one.size() == 2);
  CHECK(one[0] == AdmissibleTriple{0, 0, 0});
  CHECK(one[1] == AdmissibleTriple{1, 1, 1});

  auto two = enumerate_admissible({2, 2, 2});
  REQUIRE(two.size() == 6);
  const std::vector<AdmissibleTriple> expected = {
      {0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}, {2, 2, 2}};
  CHECK(two == expected);
  CHECK(std::is_sorted(two.begin(), two.end()));
}

TEST_CASE("count matches enumeration and dim permutations") {
  for (int d1 = 1; d1 <= 6; ++d1)
    for (int d2 = d1; d2 <= 6; ++d2)
      for (int d3 = d2; d3 <= 6; ++d3) {
        const Dims d{d1, d2, d3};
        const long n = count_admissible(d);
        CHECK(n == static_cast<long>(enumerate_admissible(d).size()));
        CHECK(n == count_admissible({d2, d3, d1}));
        CHECK(n == count_admissible({d3, d1, d2}));
        CHECK(n == count_admissible({d2, d1, d3}));
        CHECK(n >= 1);
        CHECK(n <= long{d1} * d2 * d3 + 1);
      }
}

TEST_CASE("count at published values") {
  CHECK(count_admissible({1, 1, 1}) == 2);
  CHECK(count_admissible({2, 2, 2}) == 6);
  CHECK(count_admissible({5, 5, 5}) == 75);
  CHECK(count_admissible({10, 10, 10}) == 701);
  // With a length-1 axis the nonzero triples force equal ranks on the other
  // two axes, so N = 1 + min(d2, d3).
  CHECK(count_admissible({1, 4, 7}) == 5);
  CHECK(count_admissible({1, 100, 3}) == 4);
}

TEST_CASE("approximation closed form") {
  CHECK(std::lround(approx_count_equal(5)) == 67);
  CHECK(std::lround(approx_count_equal(100)) == 937655);
  const double rel50 = approx_count_equal(50) / 111591.0 - 1.0;
  CHECK(std::abs(rel50 - 0.0025) < 1e-4);
  CHECK_THROWS_AS(approx_count_equal(0), std::invalid_argument);
}

TEST_CASE("n123 bounds") {
  N123Bounds b = n123_bounds({3, 3, 3}, {2, 2, 2});
  CHECK(b.upper == 24);
  CHECK(b.lower_c1 == 16);
  CHECK(b.lower_c2 == 16);
  CHECK(b.lower_c3 == 20);

  N123Bounds zero = n123_bounds({3, 3, 3}, {0, 0, 0});
  CHECK(zero.upper == 18);
  CHECK(zero.lower_c1 == 0);
  CHECK(zero.lower_c2 == 0);
  CHECK(zero.lower_c3 == 0);

  N123Bounds full = n123_bounds({3, 2, 2}, {3, 2, 2});
  CHECK(full.upper == 12);

  CHECK_THROWS_AS(n123_bounds({2, 2, 2}, {2, 2, 1}), std::invalid_argument);
}

TEST_CASE("bounds are nested for every admissible triple at small dims") {
  for (int d1 = 1; d1 <= 4; ++d1)
    for (int d2 = 1; d2 <= 4; ++d2)
      for (int d3 = 1; d3 <= 4; ++d3)
        for (const AdmissibleTriple& t : enumerate_admissible({d1, d2, d3})) {
          N123Bounds b = n123_bounds({d1, d2, d3}, t);
          CHECK(b.lower_c1 <= b.lower_c2);
          CHECK(b.lower_c2 <= b.lower_c3);
          CHECK(b.lower_c3 <= b.upper);
        }
}
