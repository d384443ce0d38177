#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cubic27/config.hpp"
#include "cubic27/lattice.hpp"
#include "cubic27/linear_system.hpp"

namespace cubic27 {

/// The boundary divisor: two triangles of hexagon lines.
struct DivisorD {
  std::array<ProjLine, 3> h1_lines;  // l12, l34, l56
  std::array<ProjLine, 3> h2_lines;  // l23, l45, l61
  std::array<DivClass, 6> classes;   // per hexagon line, in hexagon order
  bool h1_concurrent = false;        // flagged, not an error
  bool h2_concurrent = false;
};

DivisorD divisor_D(const SixPointConfig& config);

/// A point of the blown-up surface: an ordinary plane point away from the
/// centers, or a point of an exceptional curve, identified by the line
/// through the center with that tangent direction.
struct SurfacePoint {
  struct Plane {
    ProjPoint p;
  };
  struct InfinitelyNear {
    int center = 1;       // 1-based
    ProjLine direction;   // the line through the center realizing the direction
  };
  std::variant<Plane, InfinitelyNear> value;

  static SurfacePoint plane(ProjPoint p) { return {Plane{std::move(p)}}; }
  static SurfacePoint infinitely_near(int center, ProjLine dir) {
    return {InfinitelyNear{center, std::move(dir)}};
  }
  bool is_plane() const { return std::holds_alternative<Plane>(value); }
  bool operator==(const SurfacePoint& o) const;
};

/// Either an exceptional curve E_i or the strict transform of a plane curve
/// with its multiplicities at the six centers.
struct CurveOnSurface {
  struct Exceptional {
    int center = 1;
  };
  struct StrictTransform {
    HomogPoly curve;
    std::array<int, 6> mult{0, 0, 0, 0, 0, 0};
  };
  std::variant<Exceptional, StrictTransform> value;

  static CurveOnSurface exceptional(int center) { return {Exceptional{center}}; }
  /// Computes and records the center multiplicities from the configuration.
  static CurveOnSurface strict_transform(const HomogPoly& C, const SixPointConfig& config);

  DivClass divisor_class() const;
};

struct SupportPoint {
  SurfacePoint point;
  std::vector<int> hexagon_lines;  // 0-based indices of the boundary lines met here
  int local_degree = 0;            // total intersection degree with D at this point
  int branch_count = 1;            // distinct tangent directions of the curve here
};

/// Support of the pullback of D along a curve, with exact counts. Closure
/// counts follow the normalization convention: a support point contributes
/// one per tangent direction of the curve there.
struct SupportReport {
  std::vector<SupportPoint> points;          // materialized rational support
  int irrational_points = 0;                  // distinct non-rational support points
  int irrational_branches = 0;                // their branch contributions (one each)
  int count_rational = 0;                     // rational support points
  int count_closure = 0;                      // branch-weighted count over the closure
  int total_degree_geometric = 0;             // sum of local degrees, incl. irrational
  long total_degree_lattice = 0;              // pairing of the classes
};

enum class CurveType { AffineLine, Gm, Other };

SupportReport pullback_support(const CurveOnSurface& curve, const SixPointConfig& config);
CurveType curve_type(const SupportReport& report, bool curve_is_rational);
const char* curve_type_name(CurveType t);

}  // namespace cubic27
