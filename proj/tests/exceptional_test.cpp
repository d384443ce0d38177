#include <doctest.h>

#include <set>

#include "cubic27/exceptional.hpp"
#include "cubic27/linear_system.hpp"

using namespace cubic27;

namespace {
// dihedral image of a multiplicity vector, used for orbit checks
std::array<int, 6> rotate(const std::array<int, 6>& m, int t) {
  std::array<int, 6> out{};
  for (int i = 0; i < 6; ++i) out[static_cast<size_t>((i + t) % 6)] = m[static_cast<size_t>(i)];
  return out;
}
std::array<int, 6> reflect(const std::array<int, 6>& m, int c) {
  std::array<int, 6> out{};
  for (int i = 0; i < 6; ++i)
    out[static_cast<size_t>(((c - i) % 6 + 6) % 6)] = m[static_cast<size_t>(i)];
  return out;
}
bool same_orbit(const std::array<int, 6>& a, const std::array<int, 6>& b) {
  for (int t = 0; t < 6; ++t) {
    if (rotate(a, t) == b) return true;
    for (int c = 0; c < 6; ++c)
      if (reflect(rotate(a, t), c) == b) return true;
  }
  return false;
}
int count_positive(const std::array<int, 6>& m) {
  int n = 0;
  for (int v : m) n += v > 0 ? 1 : 0;
  return n;
}
}  // namespace

TEST_CASE("the profile search up to degree five returns exactly four families") {
  auto profiles = degree_bound_search(5);
  REQUIRE(profiles.size() == 5);

  std::vector<MultiplicityProfile> d1, d2, d3, d4, d5plus;
  for (const auto& p : profiles) {
    if (p.d == 1) d1.push_back(p);
    else if (p.d == 2) d2.push_back(p);
    else if (p.d == 3) d3.push_back(p);
    else if (p.d == 4) d4.push_back(p);
    else d5plus.push_back(p);
  }
  CHECK(d5plus.empty());

  // degree one: the two chord orbits, two unit multiplicities at
  // non-neighboring centers
  REQUIRE(d1.size() == 2);
  bool saw_distance2 = false, saw_distance3 = false;
  for (const auto& p : d1) {
    CHECK(count_positive(p.m) == 2);
    saw_distance2 = saw_distance2 || same_orbit(p.m, {1, 0, 1, 0, 0, 0});
    saw_distance3 = saw_distance3 || same_orbit(p.m, {1, 0, 0, 1, 0, 0});
    CHECK(p.genus_slack == 0);
  }
  CHECK(saw_distance2);
  CHECK(saw_distance3);

  // degree two: the five-center conic
  REQUIRE(d2.size() == 1);
  CHECK(same_orbit(d2[0].m, {0, 1, 1, 1, 1, 1}));
  CHECK(d2[0].genus_slack == 0);

  // degree three: one double point, transverse boundary points
  REQUIRE(d3.size() == 1);
  CHECK(same_orbit(d3[0].m, {2, 1, 1, 1, 1, 1}));
  CHECK(d3[0].genus_slack == 0);
  for (const auto& ep : d3[0].extra_points) {
    CHECK(ep.lines.size() == 2);
    for (int c : ep.contacts) CHECK(c == 1);
  }

  // degree four: three double points in a row, one tangency per crossing
  REQUIRE(d4.size() == 1);
  CHECK(same_orbit(d4[0].m, {2, 2, 1, 1, 1, 2}));
  CHECK(d4[0].genus_slack == 0);
  int tangencies = 0;
  for (const auto& ep : d4[0].extra_points) {
    REQUIRE(ep.lines.size() == 2);
    for (int c : ep.contacts) {
      CHECK(c >= 1);
      if (c == 2) ++tangencies;
    }
  }
  CHECK(tangencies == 2);
}

TEST_CASE("degree bound two yields only chords and the five-center conic") {
  auto profiles = degree_bound_search(2);
  for (const auto& p : profiles) {
    CHECK(p.d <= 2);
    if (p.d == 1) CHECK(count_positive(p.m) == 2);
    if (p.d == 2) CHECK(count_positive(p.m) == 5);
  }
}

TEST_CASE("transverse-only search drops the tangent quartic") {
  auto profiles = degree_bound_search(5, false);
  REQUIRE(profiles.size() == 4);
  for (const auto& p : profiles) CHECK(p.d <= 3);
}

TEST_CASE("the search respects its resource guard") {
  CHECK_THROWS_AS(degree_bound_search(0), Error);
  CHECK_THROWS_AS(degree_bound_search(13), Error);
}

TEST_CASE("search output is closed under the hexagon symmetries") {
  auto profiles = degree_bound_search(5);
  for (const auto& p : profiles) {
    // every dihedral image of the multiplicity vector belongs to some
    // returned class of the same degree
    for (int t = 0; t < 6; ++t) {
      auto img = rotate(p.m, t);
      bool matched = false;
      for (const auto& q : profiles) matched = matched || (q.d == p.d && same_orbit(q.m, img));
      CHECK(matched);
    }
  }
}

TEST_CASE("the genus reduction equivalence holds on the grid") {
  CHECK(verify_inequality_reduction(10));
  CHECK(verify_inequality_reduction(1));
  CHECK_THROWS_AS(verify_inequality_reduction(0), Error);
  // spot checks of the substitution: (1,1) passes both sides, (2,1) fails both
  {
    long m1 = 1, m2 = 1;
    long d = m1 + m2;
    CHECK((d - 1) * (d - 2) >= 3 * m1 * (m1 - 1) + 3 * m2 * (m2 - 1));
    CHECK(-(m1 - m2) * (m1 - m2) - (m1 + m2) + 2 >= 0);
  }
  {
    long m1 = 2, m2 = 1;
    long d = m1 + m2;
    CHECK((d - 1) * (d - 2) < 3 * m1 * (m1 - 1) + 3 * m2 * (m2 - 1));
    CHECK(-(m1 - m2) * (m1 - m2) - (m1 + m2) + 2 < 0);
  }
}

TEST_CASE("exceptional components of the standard configuration") {
  auto rep = exceptional_components(standard_config());
  CHECK(rep.components.size() == 21);
  CHECK(rep.extra_components.empty());
  CHECK(rep.genericity.all_hold());
  std::set<std::string> labels;
  for (const auto& c : rep.components) {
    CHECK(c.type == CurveType::Gm);
    CHECK(c.support.count_closure == 2);
    CHECK(c.support.total_degree_geometric == c.support.total_degree_lattice);
    labels.insert(c.label.str());
  }
  CHECK(labels.size() == 21);
}

TEST_CASE("classification of low-degree curves") {
  auto config = standard_config();
  SUBCASE("a chord through two centers") {
    HomogPoly l14 = HomogPoly::linear(config.chord(1, 4));
    auto cls = classify_curve(l14, config);
    CHECK(cls.kind == Classification::Kind::ChordThroughTwoCenters);
    CHECK(cls.i == 1);
    CHECK(cls.j == 4);
  }
  SUBCASE("the conic through five centers") {
    std::vector<PointCondition> conds;
    for (int k = 1; k <= 6; ++k)
      if (k != 2) conds.push_back({config.point(k), 1});
    auto sys = linear_system(2, conds);
    auto cls = classify_curve(sys.basis[0], config);
    CHECK(cls.kind == Classification::Kind::ConicThroughFiveCenters);
    CHECK(cls.i == 2);
  }
  SUBCASE("a conic through four centers is not exceptional") {
    std::vector<PointCondition> conds;
    for (int k = 1; k <= 4; ++k) conds.push_back({config.point(k), 1});
    conds.push_back({ProjPoint(17, 5, 3), 1});
    auto sys = linear_system(2, conds);
    REQUIRE(sys.kernel_dimension == 1);
    auto cls = classify_curve(sys.basis[0], config);
    CHECK(cls.kind == Classification::Kind::NotExceptional);
    CHECK(cls.support.count_closure >= 3);
  }
  SUBCASE("a boundary line is rejected") {
    HomogPoly l12 = HomogPoly::linear(config.hexagon_line(0));
    CHECK_THROWS_AS(classify_curve(l12, config), Error);
  }
}
