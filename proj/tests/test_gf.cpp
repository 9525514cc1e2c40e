#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logtor/gf.hpp"

using namespace logtor;

TEST_CASE("field arithmetic mod p") {
  GFp gf(101);
  for (std::uint32_t a = 1; a < 101; ++a) {
    CHECK(gf.mul(a, gf.inv(a)) == 1);
    CHECK(gf.add(a, gf.neg(a)) == 0);
  }
  CHECK(gf.pow(2, 100) == 1);  // Fermat
  CHECK(gf.reduce(Rational(1, 2)).value() == 51);
  CHECK_FALSE(gf.reduce(Rational(1, 101)).has_value());
  CHECK(gf.reduce(Rational(-3)).value() == 98);
}

TEST_CASE("projective point enumeration") {
  GFp gf(5);
  long long seen = 0;
  for_each_projective_point(gf, 2, [&](const std::vector<std::uint32_t>& pt) {
    ++seen;
    std::size_t lead = 0;
    while (pt[lead] == 0) ++lead;
    CHECK(pt[lead] == 1);
  });
  CHECK(seen == projective_point_count(5, 2));
  CHECK(projective_point_count(5, 2) == 31);
  CHECK(projective_point_count(101, 1) == 102);
}

TEST_CASE("singular point counting on the quadric surface") {
  // x0^2 y0^2 + x1^2 y1^2 has exactly the two corner singularities
  // ((0:1),(1:0)) and ((1:0),(0:1)), where all four partials vanish.
  MPoly split(Shape({1, 1}), MultiDegree({2, 2}));
  split.add_term({2, 0, 2, 0}, Rational(1));
  split.add_term({0, 2, 0, 2}, Rational(1));
  CHECK(singular_count_p1xp1(split, 101).value() == 2);

  // with b = 1 the split form is smooth
  MPoly split21(Shape({1, 1}), MultiDegree({2, 1}));
  split21.add_term({2, 0, 1, 0}, Rational(1));
  split21.add_term({0, 2, 0, 1}, Rational(1));
  CHECK(singular_count_p1xp1(split21, 101).value() == 0);

  // smooth (1,1) divisor
  MPoly conic(Shape({1, 1}), MultiDegree({1, 1}));
  conic.add_term({1, 0, 1, 0}, Rational(1));
  conic.add_term({0, 1, 0, 1}, Rational(1));
  CHECK(singular_count_p1xp1(conic, 103).value() == 0);

  // x0 x1 y0 y1: four singular points (the pairwise line crossings)
  MPoly lines(Shape({1, 1}), MultiDegree({2, 2}));
  lines.add_term({1, 1, 1, 1}, Rational(1));
  CHECK(singular_count_p1xp1(lines, 101).value() == 4);

  // denominator divisible by p
  MPoly bad(Shape({1, 1}), MultiDegree({1, 1}));
  bad.add_term({1, 0, 1, 0}, Rational(1, 101));
  bad.add_term({0, 1, 0, 1}, Rational(1));
  CHECK_FALSE(singular_count_p1xp1(bad, 101).has_value());
}

TEST_CASE("rank and kernel mod p") {
  GFp gf(101);
  std::vector<std::vector<std::uint32_t>> m{{1, 2, 3}, {2, 4, 6}, {0, 0, 1}};
  CHECK(rank_mod_p(gf, m) == 2);
  auto kern = kernel_mod_p(gf, m);
  REQUIRE(kern.size() == 1);
  for (const auto& row : m) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < 3; ++i) acc += static_cast<std::uint64_t>(row[i]) * kern[0][i];
    CHECK(acc % 101 == 0);
  }
}

TEST_CASE("incidence census finds concurrent points") {
  GFp gf(101);
  // three concurrent lines through (0:0:1) in P^2 plus one generic line
  std::vector<std::vector<std::uint32_t>> lines{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 2, 3}};
  auto census = incidence_census(gf, lines, 2);
  REQUIRE(census.has_value());
  int triple_points = 0;
  for (const auto& [pt, mask] : census->points) {
    int inc = __builtin_popcountll(mask);
    CHECK(inc >= 2);
    if (inc >= 3) {
      ++triple_points;
      CHECK(pt == std::vector<std::uint32_t>{0, 0, 1});
    }
  }
  CHECK(triple_points == 1);

  // bad reduction: proportional covectors mod p
  std::vector<std::vector<std::uint32_t>> prop{{1, 2, 3}, {2, 4, 6}};
  CHECK_FALSE(incidence_census(gf, prop, 2).has_value());
}
