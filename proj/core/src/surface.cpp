#include "cubic27/surface.hpp"

#include <algorithm>
#include <map>

namespace cubic27 {

bool SurfacePoint::operator==(const SurfacePoint& o) const {
  if (value.index() != o.value.index()) return false;
  if (is_plane())
    return std::get<Plane>(value).p == std::get<Plane>(o.value).p;
  const auto& a = std::get<InfinitelyNear>(value);
  const auto& b = std::get<InfinitelyNear>(o.value);
  return a.center == b.center && a.direction == b.direction;
}

DivisorD divisor_D(const SixPointConfig& config) {
  DivisorD d;
  const auto& hex = config.hexagon();
  d.h1_lines = {hex[0], hex[2], hex[4]};
  d.h2_lines = {hex[1], hex[3], hex[5]};
  for (int k = 0; k < 6; ++k) {
    auto [i, j] = SixPointConfig::hexagon_centers(k);
    std::array<long, 6> m{0, 0, 0, 0, 0, 0};
    m[static_cast<size_t>(i - 1)] = 1;
    m[static_cast<size_t>(j - 1)] = 1;
    d.classes[static_cast<size_t>(k)] = strict_transform_class(1, m);
  }
  d.h1_concurrent = concurrent(hex[0], hex[2], hex[4]);
  d.h2_concurrent = concurrent(hex[1], hex[3], hex[5]);
  return d;
}

CurveOnSurface CurveOnSurface::strict_transform(const HomogPoly& C, const SixPointConfig& config) {
  if (C.is_zero()) throw Error(ErrorCode::ZeroCurve, "strict transform of zero curve");
  StrictTransform st;
  st.curve = C;
  for (int i = 1; i <= 6; ++i)
    st.mult[static_cast<size_t>(i - 1)] = multiplicity_at(C, config.point(i));
  return {std::move(st)};
}

DivClass CurveOnSurface::divisor_class() const {
  if (std::holds_alternative<Exceptional>(value)) {
    DivClass c;
    c.e[static_cast<size_t>(std::get<Exceptional>(value).center - 1)] = 1;
    return c;
  }
  const auto& st = std::get<StrictTransform>(value);
  std::array<long, 6> m;
  for (size_t i = 0; i < 6; ++i) m[i] = st.mult[i];
  return strict_transform_class(st.curve.degree(), m);
}

namespace {

DivClass boundary_class() {
  DivClass c;
  c.e0 = 6;
  for (auto& v : c.e) v = -2;
  return c;
}

SupportReport exceptional_support(int center, const SixPointConfig& config) {
  SupportReport rep;
  for (int k = 0; k < 6; ++k) {
    auto [i, j] = SixPointConfig::hexagon_centers(k);
    if (i != center && j != center) continue;
    SupportPoint sp;
    sp.point = SurfacePoint::infinitely_near(center, config.hexagon_line(k));
    sp.hexagon_lines = {k};
    sp.local_degree = 1;  // E_center meets the strict transform transversally
    sp.branch_count = 1;
    rep.points.push_back(std::move(sp));
  }
  rep.count_rational = static_cast<int>(rep.points.size());
  rep.count_closure = rep.count_rational;
  for (const auto& sp : rep.points) rep.total_degree_geometric += sp.local_degree;
  return rep;
}

}  // namespace

SupportReport pullback_support(const CurveOnSurface& curve, const SixPointConfig& config) {
  SupportReport rep;
  rep.total_degree_lattice = pairing(curve.divisor_class(), boundary_class());

  if (std::holds_alternative<CurveOnSurface::Exceptional>(curve.value)) {
    int center = std::get<CurveOnSurface::Exceptional>(curve.value).center;
    SupportReport out = exceptional_support(center, config);
    out.total_degree_lattice = rep.total_degree_lattice;
    if (out.total_degree_geometric != out.total_degree_lattice)
      throw Error(ErrorCode::InternalInconsistency,
                  "exceptional curve: lattice and geometric degrees disagree");
    return out;
  }

  const auto& st = std::get<CurveOnSurface::StrictTransform>(curve.value);
  const HomogPoly& C = st.curve;

  std::map<ProjPoint, SupportPoint> plane_points;
  std::vector<SupportPoint> near_points;

  for (int k = 0; k < 6; ++k) {
    const ProjLine& line = config.hexagon_line(k);
    LineRestriction r = restrict_to_line(C, line);
    if (r.is_component)
      throw Error(ErrorCode::ComponentOfD, "curve contains a boundary line");
    auto roots = distinct_root_count(r.form);
    auto [ci, cj] = SixPointConfig::hexagon_centers(k);

    int rational_mult_sum = 0;
    for (const auto& root : roots.rational) {
      ProjPoint Q = r.point_at(root.s, root.t);
      rational_mult_sum += root.multiplicity;
      int center = 0;
      if (Q == config.point(ci)) center = ci;
      else if (Q == config.point(cj)) center = cj;
      if (center != 0) {
        int base = st.mult[static_cast<size_t>(center - 1)];
        int excess = root.multiplicity - base;
        if (excess < 0)
          throw Error(ErrorCode::InternalInconsistency,
                      "restriction multiplicity below center multiplicity");
        if (excess > 0) {
          SupportPoint sp;
          sp.point = SurfacePoint::infinitely_near(center, line);
          sp.hexagon_lines = {k};
          sp.local_degree = excess;
          sp.branch_count = 1;  // one point of the blow-up per shared direction
          near_points.push_back(std::move(sp));
        }
      } else {
        auto it = plane_points.find(Q);
        if (it == plane_points.end()) {
          SupportPoint sp;
          sp.point = SurfacePoint::plane(Q);
          sp.hexagon_lines = {k};
          sp.local_degree = root.multiplicity;
          it = plane_points.emplace(Q, std::move(sp)).first;
        } else {
          it->second.hexagon_lines.push_back(k);
          it->second.local_degree += root.multiplicity;
        }
      }
    }
    // Points of the boundary line over the closure but not over Q. A point on
    // two hexagon lines is their rational intersection, so these never
    // coincide across lines and each carries one branch.
    int irr_count = roots.total_closure - static_cast<int>(roots.rational.size());
    int irr_degree = C.degree() - rational_mult_sum;
    if (irr_count > 0) {
      rep.irrational_points += irr_count;
      rep.irrational_branches += irr_count;
      rep.total_degree_geometric += irr_degree;
    } else if (irr_degree != 0) {
      throw Error(ErrorCode::InternalInconsistency, "restriction degree not exhausted by roots");
    }
  }

  // tangent-cone cross-check: an infinitely near support point over a center
  // exists exactly when the local cone vanishes along the boundary direction
  for (int i = 1; i <= 6; ++i) {
    if (st.mult[static_cast<size_t>(i - 1)] == 0) continue;
    TangentCone tc = tangent_cone(C, config.point(i));
    for (int k = 0; k < 6; ++k) {
      auto [ci, cj] = SixPointConfig::hexagon_centers(k);
      if (ci != i && cj != i) continue;
      auto [u0, v0] = direction_in_chart(tc, config.point(i), config.hexagon_line(k));
      bool cone_vanishes = tc.cone.eval(Rational(u0), Rational(v0)) == 0;
      bool found = false;
      for (const auto& sp : near_points) {
        const auto& in = std::get<SurfacePoint::InfinitelyNear>(sp.point.value);
        if (in.center == i && in.direction == config.hexagon_line(k)) found = true;
      }
      if (cone_vanishes != found)
        throw Error(ErrorCode::InternalInconsistency,
                    "tangent-cone and restriction-excess rules disagree");
    }
  }

  for (auto& [q, sp] : plane_points) {
    int mult = multiplicity_at(C, q);
    if (mult >= 2) {
      TangentCone tc = tangent_cone(C, q);
      sp.branch_count = distinct_root_count(tc.cone).total_closure;
    }
    rep.points.push_back(sp);
  }
  for (auto& sp : near_points) rep.points.push_back(sp);

  for (const auto& sp : rep.points) {
    rep.total_degree_geometric += sp.local_degree;
    rep.count_closure += sp.branch_count;
  }
  rep.count_rational = static_cast<int>(rep.points.size());
  rep.count_closure += rep.irrational_branches;

  if (rep.total_degree_geometric != rep.total_degree_lattice)
    throw Error(ErrorCode::InternalInconsistency,
                "lattice and geometric intersection degrees disagree");
  return rep;
}

CurveType curve_type(const SupportReport& report, bool curve_is_rational) {
  if (!curve_is_rational) return CurveType::Other;
  if (report.count_closure == 1) return CurveType::AffineLine;
  if (report.count_closure == 2) return CurveType::Gm;
  return CurveType::Other;
}

const char* curve_type_name(CurveType t) {
  switch (t) {
    case CurveType::AffineLine: return "A1";
    case CurveType::Gm: return "Gm";
    case CurveType::Other: return "other";
  }
  return "other";
}

}  // namespace cubic27
