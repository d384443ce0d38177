#include <doctest.h>

#include <set>

#include "cubic27/degenerate.hpp"
#include "cubic27/linear_system.hpp"
#include "cubic27/surface.hpp"

using namespace cubic27;

TEST_CASE("boundary divisor structure") {
  auto config = standard_config();
  auto D = divisor_D(config);
  CHECK(!D.h1_concurrent);
  CHECK(!D.h2_concurrent);
  DivClass sum1 = D.classes[0] + D.classes[2] + D.classes[4];
  DivClass sum2 = D.classes[1] + D.classes[3] + D.classes[5];
  CHECK(sum1 == hyperplane_class());
  CHECK(sum2 == hyperplane_class());
  // six distinct lines
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      CHECK(!(config.hexagon_line(a) == config.hexagon_line(b)));
}

TEST_CASE("triple-point boundary is flagged, not rejected") {
  auto build = build_triple_point_config();
  auto D = divisor_D(build.config);
  CHECK(D.h1_concurrent);
  CHECK(D.h2_concurrent);
}

TEST_CASE("support of an exceptional curve") {
  auto config = standard_config();
  auto rep = pullback_support(CurveOnSurface::exceptional(1), config);
  CHECK(rep.count_closure == 2);
  CHECK(rep.count_rational == 2);
  CHECK(rep.total_degree_geometric == 2);
  CHECK(rep.total_degree_lattice == 2);
  REQUIRE(rep.points.size() == 2);
  // the two directions are those of the hexagon lines through P1
  for (const auto& sp : rep.points) {
    REQUIRE(!sp.point.is_plane());
    const auto& in = std::get<SurfacePoint::InfinitelyNear>(sp.point.value);
    CHECK(in.center == 1);
    CHECK((in.direction == config.hexagon_line(0) || in.direction == config.hexagon_line(5)));
  }
}

TEST_CASE("support of a chord strict transform on the standard configuration") {
  auto config = standard_config();
  HomogPoly l14 = HomogPoly::linear(config.chord(1, 4));
  auto curve = CurveOnSurface::strict_transform(l14, config);
  auto rep = pullback_support(curve, config);
  CHECK(rep.count_closure == 2);
  CHECK(curve_type(rep, true) == CurveType::Gm);
  // one point on l23, one on l56; the other lines meet the chord at centers
  REQUIRE(rep.points.size() == 2);
  std::set<int> lines;
  for (const auto& sp : rep.points) {
    CHECK(sp.point.is_plane());
    REQUIRE(sp.hexagon_lines.size() == 1);
    lines.insert(sp.hexagon_lines[0]);
  }
  CHECK(lines == std::set<int>{1, 4});
}

TEST_CASE("the forced crossing merges two boundary lines into one point") {
  std::array<ProjPoint, 5> seeds = {ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1),
                                    ProjPoint(1, 1, 1), ProjPoint(1, 2, 5)};
  auto result = build_affine_line_config(seeds);
  REQUIRE(std::holds_alternative<AffineLineBuild>(result));
  const auto& build = std::get<AffineLineBuild>(result);
  HomogPoly l14 = HomogPoly::linear(build.config.chord(1, 4));
  auto rep = pullback_support(CurveOnSurface::strict_transform(l14, build.config), build.config);
  CHECK(rep.count_closure == 1);
  CHECK(curve_type(rep, true) == CurveType::AffineLine);
  REQUIRE(rep.points.size() == 1);
  CHECK(rep.points[0].hexagon_lines.size() == 2);
  CHECK(std::get<SurfacePoint::Plane>(rep.points[0].point.value).p == build.witness.R);
  CHECK(rep.points[0].local_degree == 2);
}

TEST_CASE("a boundary line is rejected as a curve") {
  auto config = standard_config();
  HomogPoly l12 = HomogPoly::linear(config.hexagon_line(0));
  auto curve = CurveOnSurface::strict_transform(l12, config);
  CHECK_THROWS_AS(pullback_support(curve, config), Error);
}

TEST_CASE("lattice and geometric degrees agree for every line off the boundary") {
  auto config = standard_config();
  for (const auto& [label, cls] : lines_27()) {
    if (label.kind == LineLabel::Kind::Chord && config.is_hexagon_chord(label.i, label.j))
      continue;
    CurveOnSurface curve = CurveOnSurface::exceptional(1);
    if (label.kind == LineLabel::Kind::Exceptional) {
      curve = CurveOnSurface::exceptional(label.i);
    } else if (label.kind == LineLabel::Kind::Chord) {
      curve = CurveOnSurface::strict_transform(
          HomogPoly::linear(config.chord(label.i, label.j)), config);
    } else {
      std::vector<PointCondition> conds;
      for (int k = 1; k <= 6; ++k)
        if (k != label.i) conds.push_back({config.point(k), 1});
      auto sys = linear_system(2, conds);
      REQUIRE(sys.kernel_dimension == 1);
      curve = CurveOnSurface::strict_transform(sys.basis[0], config);
    }
    CHECK(curve.divisor_class() == cls);
    auto rep = pullback_support(curve, config);  // throws on any disagreement
    CHECK(rep.total_degree_geometric == 2);
    CHECK(rep.count_closure == 2);
  }
}

TEST_CASE("curve classification by support count") {
  SupportReport one;
  one.count_closure = 1;
  SupportReport two;
  two.count_closure = 2;
  SupportReport three;
  three.count_closure = 3;
  CHECK(curve_type(one, true) == CurveType::AffineLine);
  CHECK(curve_type(two, true) == CurveType::Gm);
  CHECK(curve_type(three, true) == CurveType::Other);
  CHECK(curve_type(two, false) == CurveType::Other);
}

TEST_CASE("a nodal crossing on the boundary counts branchwise") {
  // y^2 z = x^3 + x^2 z has its node at (0:0:1); build a configuration whose
  // line l45 passes through the node while no center lies on the cubic
  HomogPoly F = HomogPoly::from_terms(
      3, {{{0, 2, 1}, Rational(1)}, {{3, 0, 0}, Rational(-1)}, {{2, 0, 1}, Rational(-1)}});
  std::array<ProjPoint, 6> pts = {ProjPoint(1, 0, 0),   ProjPoint(0, 1, 5),
                                  ProjPoint(1, 2, 3),   ProjPoint(2, 1, 1),
                                  ProjPoint(-2, -1, 1), ProjPoint(0, 1, 3)};
  auto gp = general_position_check(pts);
  REQUIRE(gp.general_position);
  auto cfg = SixPointConfig::create(pts);
  REQUIRE(incident(ProjPoint(0, 0, 1), cfg.hexagon_line(3)));  // l45 is x = 2y
  for (int i = 1; i <= 6; ++i) REQUIRE(F.eval(cfg.point(i)) != 0);
  auto rep = pullback_support(CurveOnSurface::strict_transform(F, cfg), cfg);
  bool found_node_point = false;
  for (const auto& sp : rep.points)
    if (sp.point.is_plane() &&
        std::get<SurfacePoint::Plane>(sp.point.value).p == ProjPoint(0, 0, 1)) {
      found_node_point = true;
      CHECK(sp.branch_count == 2);
      CHECK(sp.local_degree == 2);
    }
  CHECK(found_node_point);
  CHECK(rep.count_closure > rep.count_rational);
}
