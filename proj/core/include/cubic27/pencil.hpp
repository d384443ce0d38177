#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubic27/homog_poly.hpp"
#include "cubic27/poly.hpp"
#include "cubic27/roots.hpp"

namespace cubic27 {

/// Exact description of the singular locus of a plane curve.
struct SingularLocus {
  bool positive_dimensional = false;   // non-reduced / multiple component
  int fiber_count_closure = 0;         // distinct (x:y)-fibers carrying singular points
  std::vector<ProjPoint> rational_points;
  bool all_fibers_rational = false;    // every singular fiber is a listed rational point
};

/// Singular points of F = 0, by eliminating with pairwise and coupled
/// resultants of the partial derivatives. Exact; constants aside, no
/// spurious factors survive.
SingularLocus singular_points(const HomogPoly& F);

struct PencilMember {
  Rational t;                      // member F0 + t F1
  bool verified_singular = false;
  std::vector<ProjPoint> singular_points;
  std::vector<bool> is_node;       // parallel to singular_points
  bool has_rational_singular_point = false;
};

struct PencilDiscriminantReport {
  bool degenerate = false;               // eliminant vanished identically
  IPoly eliminant;                        // primitive eliminant in t
  int squarefree_degree = 0;              // distinct singular members (affine chart)
  std::vector<PencilMember> rational_members;
  std::vector<Rational> discarded_candidates;  // naive-route roots failing verification
  bool infinity_member_singular = false;       // F1 itself singular
  std::vector<std::string> notes;              // corner-case annotations
};

/// Eliminates the plane variables from {d(F0 + tF1)/dx = d/dy = d/dz = 0} in
/// the fixed order z, then (x:y), producing a univariate eliminant in t.
PencilDiscriminantReport singular_members_of_pencil(const HomogPoly& F0, const HomogPoly& F1);

}  // namespace cubic27
