#include <doctest.h>

#include <vector>

#include "voa/random.hpp"
#include "voa/types.hpp"

TEST_CASE("uniform_unit stays in [0, 1)") {
  voa::RandomSource rng(42);
  for (int i = 0; i < 100000; ++i) {
    const double r = rng.uniform_unit();
    REQUIRE(r >= 0.0);
    REQUIRE(r < 1.0);
  }
}

TEST_CASE("equal seeds give equal sequences") {
  voa::RandomSource a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 10000; ++i) {
    const double x = a.uniform_unit();
    REQUIRE(x == b.uniform_unit());
    differs = differs || x != c.uniform_unit();
  }
  CHECK(differs);
}

TEST_CASE("first draws for seed 42 are pinned") {
  // mt19937_64's 10000th output is fixed by the standard; it anchors the
  // engine choice across platforms.
  std::mt19937_64 reference(5489u);
  reference.discard(9999);
  CHECK(reference() == 9981545732273789042ull);

  voa::RandomSource rng(42);
  std::mt19937_64 raw(42);
  for (int i = 0; i < 5; ++i) {
    CHECK(rng.uniform_unit() == static_cast<double>(raw() >> 11) * 0x1.0p-53);
  }
}

TEST_CASE("unit draws have mean close to one half") {
  voa::RandomSource rng(2024);
  double sum = 0.0;
  const int n = 1000000;
  for (int i = 0; i < n; ++i) sum += rng.uniform_unit();
  const double mean = sum / n;
  CHECK(mean >= 0.495);
  CHECK(mean <= 0.505);
}

TEST_CASE("uniform_in is the affine image of the unit draw") {
  voa::RandomSource a(9), b(9);
  for (int i = 0; i < 1000; ++i) {
    const double r = a.uniform_unit();
    const double v = b.uniform_in(-10.0, 10.0);
    CHECK(v == -10.0 + r * 20.0);
    CHECK(v >= -10.0);
    CHECK(v < 10.0);
  }
  voa::RandomSource c(1);
  for (int i = 0; i < 1000; ++i) {
    const double v = c.uniform_in(0.0, 1.0);
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }
  // A draw of exactly one half maps to the centre of a symmetric interval.
  CHECK(-4.5 + 0.5 * (4.5 - -4.5) == 0.0);
}

TEST_CASE("uniform_in rejects empty ranges") {
  voa::RandomSource rng(1);
  CHECK_THROWS_AS(rng.uniform_in(1.0, 1.0), voa::ConfigError);
  CHECK_THROWS_AS(rng.uniform_in(2.0, -2.0), voa::ConfigError);
}
