#pragma once

#include <array>
#include <compare>
#include <vector>

#include "cubic27/numbers.hpp"

namespace cubic27 {

namespace detail {
// Canonical representative of a homogeneous triple: primitive integer
// vector, first nonzero entry positive. Makes projective equality a plain
// coordinate comparison.
std::array<Int, 3> canonicalize_triple(std::array<Int, 3> v);
std::array<Int, 3> cross(const std::array<Int, 3>& a, const std::array<Int, 3>& b);
Int dot(const std::array<Int, 3>& a, const std::array<Int, 3>& b);
Int det3(const std::array<Int, 3>& r0, const std::array<Int, 3>& r1,
         const std::array<Int, 3>& r2);
}  // namespace detail

class ProjPoint {
 public:
  ProjPoint() : c_{Int(0), Int(0), Int(1)} {}
  explicit ProjPoint(std::array<Int, 3> coords);
  ProjPoint(Int x, Int y, Int z) : ProjPoint(std::array<Int, 3>{std::move(x), std::move(y), std::move(z)}) {}

  const std::array<Int, 3>& coords() const { return c_; }
  const Int& operator[](int i) const { return c_[static_cast<size_t>(i)]; }

  bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
  std::strong_ordering operator<=>(const ProjPoint& o) const;

  std::string str() const;

 private:
  std::array<Int, 3> c_;
};

class ProjLine {
 public:
  ProjLine() : c_{Int(0), Int(0), Int(1)} {}
  explicit ProjLine(std::array<Int, 3> coeffs);
  ProjLine(Int a, Int b, Int c) : ProjLine(std::array<Int, 3>{std::move(a), std::move(b), std::move(c)}) {}

  const std::array<Int, 3>& coeffs() const { return c_; }
  const Int& operator[](int i) const { return c_[static_cast<size_t>(i)]; }

  bool operator==(const ProjLine& o) const { return c_ == o.c_; }
  std::strong_ordering operator<=>(const ProjLine& o) const;

  std::string str() const;

 private:
  std::array<Int, 3> c_;
};

/// Clears denominators and canonicalizes. Throws on the zero triple.
ProjPoint normalize(const std::array<Rational, 3>& raw);
ProjLine normalize_line(const std::array<Rational, 3>& raw);

/// Line spanned by two distinct points.
ProjLine line_through(const ProjPoint& p, const ProjPoint& q);

/// Intersection point of two distinct lines.
ProjPoint meet_lines(const ProjLine& l1, const ProjLine& l2);

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);
bool concurrent(const ProjLine& l1, const ProjLine& l2, const ProjLine& l3);
bool incident(const ProjPoint& p, const ProjLine& l);

/// Determinant of the 6x6 matrix of degree-2 monomials of six points;
/// vanishes exactly when a conic passes through all six.
Int conic_determinant(const std::array<ProjPoint, 6>& pts);

}  // namespace cubic27
