#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cubic27/binary_form.hpp"
#include "cubic27/projective.hpp"

namespace cubic27 {

using Monomial = std::array<int, 3>;  // exponents of x, y, z

/// Homogeneous polynomial in x, y, z with exact rational coefficients.
class HomogPoly {
 public:
  HomogPoly() = default;
  explicit HomogPoly(int degree) : degree_(degree) {}
  HomogPoly(int degree, std::map<Monomial, Rational> coeffs);

  static HomogPoly linear(const ProjLine& l);
  static HomogPoly from_terms(int degree,
                              const std::vector<std::pair<Monomial, Rational>>& terms);

  int degree() const { return degree_; }
  bool is_zero() const { return c_.empty(); }
  const std::map<Monomial, Rational>& coeffs() const { return c_; }
  Rational coeff(const Monomial& m) const;

  Rational eval(const std::array<Rational, 3>& p) const;
  Rational eval(const ProjPoint& p) const;

  HomogPoly partial(int var) const;
  HomogPoly operator*(const HomogPoly& o) const;
  HomogPoly operator+(const HomogPoly& o) const;
  HomogPoly operator-() const;
  HomogPoly operator*(const Rational& s) const;
  bool operator==(const HomogPoly& o) const { return degree_ == o.degree_ && c_ == o.c_; }

  /// Substitution x_vec = u*a + v*b + w*c (columns a, b, c); returns the
  /// polynomial in (u, v, w).
  HomogPoly substitute_linear(const std::array<Int, 3>& a, const std::array<Int, 3>& b,
                              const std::array<Int, 3>& c) const;

  /// Primitive-integer rescaling of the coefficient vector.
  HomogPoly normalized() const;

  std::string str() const;

 private:
  void insert(const Monomial& m, const Rational& v);
  int degree_ = 0;
  std::map<Monomial, Rational> c_;
};

/// Local data at a point: the first nonvanishing form of the dehomogenized
/// expansion, in the chart determined by `chart` (the coordinate of p used as
/// the local "1") and the two remaining axes in increasing coordinate order.
struct TangentCone {
  int multiplicity = 0;
  BinaryForm cone;    // degree = multiplicity, in the local pair (u, v)
  int chart = 2;      // index k with p[k] != 0
  std::array<int, 2> axes{0, 1};
};

int multiplicity_at(const HomogPoly& F, const ProjPoint& p);
TangentCone tangent_cone(const HomogPoly& F, const ProjPoint& p);
bool is_node(const HomogPoly& F, const ProjPoint& p);

/// Local direction of a line through p, expressed in the chart that
/// tangent_cone(F, p) uses; returns the primitive pair (u0 : v0).
std::pair<Int, Int> direction_in_chart(const TangentCone& frame, const ProjPoint& p,
                                       const ProjLine& l);

/// Line through p with prescribed local direction in the given chart.
ProjLine line_with_direction(const TangentCone& frame, const ProjPoint& p,
                             const Int& u0, const Int& v0);

struct LineRestriction {
  bool is_component = false;   // the line divides F
  BinaryForm form;             // F(s*p0 + t*p1), degree = deg F
  ProjPoint p0, p1;            // the exact parametrization used
  ProjPoint point_at(const Int& s, const Int& t) const;
};

LineRestriction restrict_to_line(const HomogPoly& F, const ProjLine& l);

/// All monomials of total degree d in the fixed coefficient order
/// (lexicographic, x-major).
std::vector<Monomial> monomials_of_degree(int d);

}  // namespace cubic27
