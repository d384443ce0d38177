#include <doctest.h>

#include "cubic27/projective.hpp"

using namespace cubic27;

namespace {
Rational q(long n, long d = 1) { return make_rational(Int(n), Int(d)); }

// independent 3x3 determinant by cofactor expansion, used as the oracle for
// the incidence predicates
Int det3_oracle(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  auto& A = a.coords();
  auto& B = b.coords();
  auto& C = c.coords();
  return A[0] * (B[1] * C[2] - B[2] * C[1]) - A[1] * (B[0] * C[2] - B[2] * C[0]) +
         A[2] * (B[0] * C[1] - B[1] * C[0]);
}
}  // namespace

TEST_CASE("normalize clears denominators and canonicalizes") {
  CHECK(normalize({q(1, 2), q(1, 3), q(0)}) == ProjPoint(3, 2, 0));
  CHECK(normalize({q(-2), q(-4), q(-6)}) == ProjPoint(1, 2, 3));
  CHECK_THROWS_AS(normalize({q(0), q(0), q(0)}), Error);
}

TEST_CASE("normalize is idempotent and constant on rays") {
  ProjPoint p = normalize({q(6, 4), q(-9, 2), q(3)});
  CHECK(normalize({Rational(p[0]), Rational(p[1]), Rational(p[2])}) == p);
  std::array<Rational, 3> scaled;
  for (int i = 0; i < 3; ++i) scaled[static_cast<size_t>(i)] = Rational(p[i]) * q(-7, 5);
  CHECK(normalize(scaled) == p);
}

TEST_CASE("line_through matches the coordinate examples") {
  CHECK(line_through(ProjPoint(1, 0, 0), ProjPoint(0, 1, 0)) == ProjLine(0, 0, 1));
  CHECK(line_through(ProjPoint(0, 0, 1), ProjPoint(1, 1, 1)) == ProjLine(1, -1, 0));
  CHECK_THROWS_AS(line_through(ProjPoint(1, 2, 3), ProjPoint(1, 2, 3)), Error);
}

TEST_CASE("line_through contains both points") {
  ProjPoint p(3, -5, 7), r(2, 9, -1);
  ProjLine l = line_through(p, r);
  CHECK(incident(p, l));
  CHECK(incident(r, l));
}

TEST_CASE("meet_lines matches the coordinate examples") {
  CHECK(meet_lines(ProjLine(0, 0, 1), ProjLine(0, 1, 0)) == ProjPoint(1, 0, 0));
  CHECK(meet_lines(ProjLine(1, -1, 0), ProjLine(0, 0, 1)) == ProjPoint(1, 1, 0));
  CHECK_THROWS_AS(meet_lines(ProjLine(0, 0, 1), ProjLine(0, 0, 1)), Error);
}

TEST_CASE("meet of two spans recovers the point") {
  ProjPoint p(1, 4, -2), a(0, 1, 5), b(3, 3, 1);
  REQUIRE(!collinear(p, a, b));
  CHECK(meet_lines(line_through(p, a), line_through(p, b)) == p);
}

TEST_CASE("collinear agrees with the determinant oracle") {
  CHECK(collinear(ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(1, 1, 0)));
  CHECK(!collinear(ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1)));
  ProjPoint a(1, 1, 0), b(2, 1, 1), c(0, -1, 1);
  CHECK(det3_oracle(a, b, c) == 0);
  CHECK(collinear(a, b, c));
  CHECK(collinear(c, a, b));
  CHECK(collinear(b, c, a));
}

TEST_CASE("conic determinant vanishes exactly for six points on a conic") {
  // (1 : t : t^2) lies on xz = y^2
  std::array<ProjPoint, 6> on_conic;
  for (long t = 0; t < 6; ++t) on_conic[static_cast<size_t>(t)] = ProjPoint(1, t, t * t);
  CHECK(conic_determinant(on_conic) == 0);
  std::array<ProjPoint, 6> off = on_conic;
  off[5] = ProjPoint(1, 4, 9);
  CHECK(conic_determinant(off) != 0);
}

TEST_CASE("exact fraction parsing rejects floating point syntax") {
  CHECK(parse_rational("2/3").has_value());
  CHECK(*parse_rational("-6/4") == make_rational(Int(-3), Int(2)));
  CHECK(*parse_rational("-1") == Rational(-1));
  CHECK(!parse_rational("1.5").has_value());
  CHECK(!parse_rational("1e3").has_value());
  CHECK(!parse_rational("2/0").has_value());
  CHECK(!parse_rational("").has_value());
  CHECK(!parse_rational("1/ 2").has_value());
}
