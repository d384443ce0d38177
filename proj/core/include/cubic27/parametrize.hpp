#pragma once

#include <array>

#include "cubic27/homog_poly.hpp"

namespace cubic27 {

/// Rational map P^1 -> P^2 given by three binary forms of a common degree.
struct Parametrization {
  std::array<BinaryForm, 3> coords;
  bool base_point_free = false;

  ProjPoint at(const Int& s, const Int& t) const;
  /// Composes the map into F; identically zero iff the image lies on F.
  BinaryForm compose_into(const HomogPoly& F) const;
};

/// Parametrizes an irreducible nodal cubic by the pencil of lines through
/// its node: each line meets the cubic in one residual point. The node is
/// reached at the two parameters of its tangent directions.
Parametrization parametrize_nodal_cubic(const HomogPoly& F, const ProjPoint& node);

}  // namespace cubic27
