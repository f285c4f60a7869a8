#include <doctest.h>

#include "helpers.hpp"

using namespace wgg;
using wgg::testing::V;

TEST_CASE("join and meet are componentwise") {
  CHECK(join(V({2, 0}), V({-1, 3})) == V({2, 3}));
  CHECK(join(V({0, 2}), V({1, 0})) == V({1, 2}));
  CHECK(meet(V({2, 0}), V({-1, 3})) == V({-1, 0}));
  Vec x = V({4, -7});
  CHECK(meet(x, x) == x);
  CHECK_THROWS_AS(join(V({1}), V({1, 2})), semantic_error);
}

TEST_CASE("positive and negative parts") {
  CHECK(positive_part(V({-2, 3})) == V({0, 3}));
  CHECK(positive_part(V({0, 0})) == V({0, 0}));
  CHECK(positive_part(V({-1, 2})) == V({0, 2}));
  CHECK(negative_part(V({-1, 2})) == V({1, 0}));
}

TEST_CASE("box counting") {
  CHECK(Box(V({0, 0}), V({2, 3})).count() == 12);
  CHECK(Box(V({1, 1}), V({0, 5})).count() == 0);
  CHECK(Box(V({1, 3}), V({1, 3})).count() == 1);
  CHECK(Box(V({1, 1}), V({0, 5})).empty());
}

TEST_CASE("lattice absorption and order-dual negation") {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    int d = static_cast<int>(rng.range(1, 3));
    Vec x = random_vec(rng, d, -9, 9);
    Vec y = random_vec(rng, d, -9, 9);
    Vec z = random_vec(rng, d, -9, 9);
    CHECK(join(x, meet(x, y)) == x);
    CHECK(-meet(x, y) == join(-x, -y));
    CHECK(join(x, y) == join(y, x));
    CHECK(meet(meet(x, y), z) == meet(x, meet(y, z)));
    CHECK(join(x, x) == x);
  }
}

TEST_CASE("box_count equals brute-force enumeration") {
  // Every pair with coordinates in [-4,4] for d = 1 and 2; sampled for d = 3.
  for (int d = 1; d <= 2; ++d) {
    std::vector<Vec> points;
    Box all(Vec::constant(d, -4), Vec::constant(d, 4));
    all.for_each([&](const Vec& x) { points.push_back(x); });
    for (const Vec& lo : points) {
      for (const Vec& hi : points) {
        Box box(lo, hi);
        Int expected = 0;
        all.for_each([&](const Vec& x) { expected += box.contains(x) ? 1 : 0; });
        REQUIRE(box.count() == expected);
      }
    }
  }
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    Box box(random_vec(rng, 3, -4, 4), random_vec(rng, 3, -4, 4));
    Int expected = 0;
    Box all(Vec::constant(3, -4), Vec::constant(3, 4));
    all.for_each([&](const Vec& x) { expected += box.contains(x) ? 1 : 0; });
    REQUIRE(box.count() == expected);
  }
}

TEST_CASE("cone membership") {
  Cone c(V({1, -2}));
  CHECK(c.contains(V({1, -2})));
  CHECK(c.contains(V({5, 0})));
  CHECK_FALSE(c.contains(V({0, 0})));
}

TEST_CASE("overflow is detected, not wrapped") {
  CHECK_THROWS_AS(checked_mul(Int{1} << 62, 4), semantic_error);
  CHECK_THROWS_AS(checked_add(Int{1} << 62, Int{1} << 62), semantic_error);
}
