#include <doctest.h>

#include "cubic27/config.hpp"

using namespace cubic27;

TEST_CASE("the example six points are in general position") {
  auto rep = general_position_check(example_points());
  CHECK(rep.general_position);
  CHECK(rep.distinct);
  CHECK(rep.conic_free);
}

TEST_CASE("a forced collinearity is reported with its witness triple") {
  std::array<ProjPoint, 6> pts = {ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(1, 1, 0),
                                  ProjPoint(1, 1, 1), ProjPoint(1, 2, 3), ProjPoint(1, 4, 9)};
  auto rep = general_position_check(pts);
  CHECK(!rep.general_position);
  REQUIRE(rep.failing_triple.has_value());
  CHECK(*rep.failing_triple == std::array<int, 3>{1, 2, 3});
}

TEST_CASE("six points on a conic fail exactly the conic predicate") {
  std::array<ProjPoint, 6> pts;
  for (long t = 0; t < 6; ++t) pts[static_cast<size_t>(t)] = ProjPoint(1, t, t * t);
  auto rep = general_position_check(pts);
  CHECK(!rep.general_position);
  CHECK(!rep.failing_triple.has_value());
  CHECK(!rep.conic_free);
}

TEST_CASE("the standard configuration passes every extra genericity predicate") {
  auto config = standard_config();
  auto rep = extra_genericity_check(config);
  CHECK(rep.general_position);
  CHECK(rep.all_hold());
  // (a) two triangle predicates, (b) nine disjoint-pair predicates,
  // (c) fifteen crossing predicates
  int a = 0, b = 0, c = 0;
  for (const auto& p : rep.predicate_results) {
    if (p.id.rfind("a:", 0) == 0) ++a;
    if (p.id.rfind("b:", 0) == 0) ++b;
    if (p.id.rfind("c:", 0) == 0) ++c;
  }
  CHECK(a == 2);
  CHECK(b == 9);
  CHECK(c == 15);
}

TEST_CASE("the example points carry a hidden triangle concurrency") {
  // (1:0:0),(0:1:0),(0:0:1),(1:1:1),(1:2:3),(1:4:9) is in general position
  // but l12, l34, l56 meet at (1:1:0); the standard configuration avoids this
  auto config = SixPointConfig::create(example_points());
  const auto& hex = config.hexagon();
  CHECK(concurrent(hex[0], hex[2], hex[4]));
  auto rep = extra_genericity_check(config);
  CHECK(!rep.all_hold());
}

TEST_CASE("hexagon and chord caches agree with direct spans") {
  auto config = standard_config();
  for (int k = 0; k < 6; ++k) {
    auto [i, j] = SixPointConfig::hexagon_centers(k);
    CHECK(config.hexagon_line(k) == line_through(config.point(i), config.point(j)));
    CHECK(config.hexagon_line(k) == config.chord(i, j));
  }
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      CHECK(config.chord(i, j) == line_through(config.point(i), config.point(j)));
}

TEST_CASE("configuration creation rejects degenerate input") {
  std::array<ProjPoint, 6> pts = {ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(1, 1, 0),
                                  ProjPoint(1, 1, 1), ProjPoint(1, 2, 3), ProjPoint(1, 4, 9)};
  CHECK_THROWS_AS(SixPointConfig::create(pts), Error);
}
