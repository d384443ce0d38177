#include <functional>
#include "cubic27/exceptional.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cubic27/degenerate.hpp"

namespace cubic27 {

std::string MultiplicityProfile::str() const {
  std::ostringstream os;
  os << "d=" << d << " m=(";
  for (int i = 0; i < 6; ++i) os << (i ? "," : "") << m[static_cast<size_t>(i)];
  os << ") q=(";
  for (int i = 0; i < 6; ++i) os << (i ? "," : "") << q[static_cast<size_t>(i)];
  os << ") points:";
  for (const auto& p : extra_points) {
    os << " {";
    for (size_t i = 0; i < p.lines.size(); ++i)
      os << (i ? "," : "") << "l" << p.lines[i] + 1 << "^" << p.contacts[i];
    os << "}";
  }
  os << " slack=" << genus_slack;
  return os.str();
}

namespace {

bool lines_adjacent(int k1, int k2) {
  // hexagon lines k and k+1 (mod 6) share a center
  int diff = (k1 - k2 + 6) % 6;
  return diff == 1 || diff == 5;
}

// All admissible line sets for one extra point: singletons and pairs of
// non-adjacent hexagon lines.
const std::vector<std::vector<int>>& point_shapes() {
  static const std::vector<std::vector<int>> shapes = [] {
    std::vector<std::vector<int>> out;
    for (int k = 0; k < 6; ++k) out.push_back({k});
    for (int k1 = 0; k1 < 6; ++k1)
      for (int k2 = k1 + 1; k2 < 6; ++k2)
        if (!lines_adjacent(k1, k2)) out.push_back({k1, k2});
    return out;
  }();
  return shapes;
}

struct Assignment {
  std::vector<MultiplicityProfile::ExtraPoint> points;
};

// Enumerates the ways at most two extra points can carry the extra degrees q.
std::vector<Assignment> coverings(const std::array<int, 6>& q, bool allow_tangency) {
  std::vector<int> supp;
  for (int k = 0; k < 6; ++k)
    if (q[static_cast<size_t>(k)] > 0) supp.push_back(k);
  std::vector<Assignment> out;
  if (supp.empty()) return out;  // no boundary points at all: rejected by ampleness

  const auto& shapes = point_shapes();
  auto try_pair = [&](const std::vector<int>* s1, const std::vector<int>* s2) {
    // the union of the shapes must equal the support exactly
    std::array<int, 6> cover{0, 0, 0, 0, 0, 0};
    for (const int k : *s1) cover[static_cast<size_t>(k)] += 1;
    if (s2)
      for (const int k : *s2) cover[static_cast<size_t>(k)] += 1;
    for (int k = 0; k < 6; ++k) {
      bool in_supp = q[static_cast<size_t>(k)] > 0;
      if (in_supp != (cover[static_cast<size_t>(k)] > 0)) return;
      if (in_supp && q[static_cast<size_t>(k)] < cover[static_cast<size_t>(k)]) return;
      if (!allow_tangency && in_supp && q[static_cast<size_t>(k)] != cover[static_cast<size_t>(k)]) return;
    }
    // contact degrees: lines covered once take the full q; lines covered
    // twice split as 1 + (q-1)
    Assignment a;
    std::array<int, 6> used{0, 0, 0, 0, 0, 0};
    auto contacts_for = [&](const std::vector<int>& shape) {
      MultiplicityProfile::ExtraPoint p;
      p.lines = shape;
      for (const int k : shape) {
        int c;
        if (cover[static_cast<size_t>(k)] == 1) {
          c = q[static_cast<size_t>(k)];
        } else {
          c = (used[static_cast<size_t>(k)] == 0) ? 1 : q[static_cast<size_t>(k)] - 1;
        }
        used[static_cast<size_t>(k)] += 1;
        p.contacts.push_back(c);
      }
      return p;
    };
    a.points.push_back(contacts_for(*s1));
    if (s2) a.points.push_back(contacts_for(*s2));
    if (!allow_tangency)
      for (const auto& p : a.points)
        for (int c : p.contacts)
          if (c != 1) return;
    out.push_back(std::move(a));
  };

  for (size_t i = 0; i < shapes.size(); ++i) {
    try_pair(&shapes[i], nullptr);
    for (size_t j = i; j < shapes.size(); ++j) try_pair(&shapes[i], &shapes[j]);
  }
  return out;
}

// ---- dihedral canonicalization ----

struct DihedralMap {
  std::array<int, 6> center;  // image of center index (0-based)
  std::array<int, 6> line;    // image of hexagon line index (0-based)
};

std::vector<DihedralMap> dihedral_group() {
  std::vector<DihedralMap> out;
  for (int t = 0; t < 6; ++t) {
    DihedralMap g;
    for (int i = 0; i < 6; ++i) {
      g.center[static_cast<size_t>(i)] = (i + t) % 6;
      g.line[static_cast<size_t>(i)] = (i + t) % 6;
    }
    out.push_back(g);
  }
  for (int c = 0; c < 6; ++c) {
    DihedralMap g;
    for (int i = 0; i < 6; ++i) {
      g.center[static_cast<size_t>(i)] = ((c - i) % 6 + 6) % 6;
      // line i joins centers i, i+1; its image joins c-i, c-i-1: line c-i-1
      g.line[static_cast<size_t>(i)] = ((c - i - 1) % 6 + 6) % 6;
    }
    out.push_back(g);
  }
  return out;
}

using ProfileKey = std::string;

ProfileKey encode(const MultiplicityProfile& p) {
  std::ostringstream os;
  os << p.d << "|";
  for (int i = 0; i < 6; ++i) os << p.m[static_cast<size_t>(i)] << ",";
  os << "|";
  for (int i = 0; i < 6; ++i) os << p.q[static_cast<size_t>(i)] << ",";
  os << "|";
  std::vector<std::string> pts;
  for (const auto& ep : p.extra_points) {
    std::ostringstream ps;
    for (size_t i = 0; i < ep.lines.size(); ++i) ps << ep.lines[i] << "^" << ep.contacts[i] << ";";
    pts.push_back(ps.str());
  }
  std::sort(pts.begin(), pts.end());
  for (const auto& s : pts) os << s << "#";
  return os.str();
}

MultiplicityProfile apply_map(const MultiplicityProfile& p, const DihedralMap& g) {
  MultiplicityProfile out;
  out.d = p.d;
  out.genus_slack = p.genus_slack;
  for (int i = 0; i < 6; ++i) {
    out.m[static_cast<size_t>(g.center[static_cast<size_t>(i)])] = p.m[static_cast<size_t>(i)];
    out.q[static_cast<size_t>(g.line[static_cast<size_t>(i)])] = p.q[static_cast<size_t>(i)];
  }
  for (const auto& ep : p.extra_points) {
    MultiplicityProfile::ExtraPoint np;
    std::vector<std::pair<int, int>> lc;
    for (size_t i = 0; i < ep.lines.size(); ++i)
      lc.push_back({g.line[static_cast<size_t>(ep.lines[i])], ep.contacts[i]});
    std::sort(lc.begin(), lc.end());
    for (auto& [l, c] : lc) {
      np.lines.push_back(l);
      np.contacts.push_back(c);
    }
    out.extra_points.push_back(std::move(np));
  }
  return out;
}

MultiplicityProfile canonical_form(const MultiplicityProfile& p) {
  static const auto group = dihedral_group();
  const MultiplicityProfile* best = nullptr;
  MultiplicityProfile best_val;
  ProfileKey best_key;
  for (const auto& g : group) {
    MultiplicityProfile cand = apply_map(p, g);
    ProfileKey key = encode(cand);
    if (!best || key < best_key) {
      best_val = cand;
      best_key = key;
      best = &best_val;
    }
  }
  return best_val;
}

}  // namespace

std::vector<MultiplicityProfile> degree_bound_search(int d_max, bool allow_tangency) {
  if (d_max < 1 || d_max > 12)
    throw Error(ErrorCode::ResourceGuard, "degree bound must be between 1 and 12");
  std::vector<MultiplicityProfile> out;
  std::set<ProfileKey> seen;

  for (int d = 1; d <= d_max; ++d) {
    std::array<int, 6> m{0, 0, 0, 0, 0, 0};
    // enumerate multiplicity vectors
    std::function<void(int)> rec = [&](int pos) {
      if (pos == 6) {
        // hexagon relations
        std::array<int, 6> q{};
        for (int k = 0; k < 6; ++k) {
          int v = d - m[static_cast<size_t>(k)] - m[static_cast<size_t>((k + 1) % 6)];
          if (v < 0) return;
          q[static_cast<size_t>(k)] = v;
        }
        // Bezout against every connecting line; a degree-1 profile is exempt
        // from the bound for its own pair of centers.
        int positive = 0;
        for (int i = 0; i < 6; ++i) positive += m[static_cast<size_t>(i)] > 0 ? 1 : 0;
        for (int i = 0; i < 6; ++i)
          for (int j = i + 1; j < 6; ++j) {
            bool self = d == 1 && m[static_cast<size_t>(i)] == 1 && m[static_cast<size_t>(j)] == 1 &&
                        positive == 2;
            if (!self && m[static_cast<size_t>(i)] + m[static_cast<size_t>(j)] > d) return;
          }
        // incidence limits of a configuration in general position: a line
        // carries at most 2 of the special points, a conic at most 5
        if (d == 1 && positive > 2) return;
        // curves of degree >= 3 in the candidate set pass through all six
        // centers (the surviving high-degree patterns do; see the search
        // documentation for the patterns this prunes)
        if (d >= 3 && positive < 6) return;
        long genus_lhs = static_cast<long>(d - 1) * (d - 2);
        long genus_rhs = 0;
        for (int i = 0; i < 6; ++i)
          genus_rhs += static_cast<long>(m[static_cast<size_t>(i)]) * (m[static_cast<size_t>(i)] - 1);
        if (genus_lhs < genus_rhs) return;

        for (auto& asg : coverings(q, allow_tangency)) {
          // forced extra singularities: an extra point on two lines with
          // contact >= 2 on both cannot be a smooth point of the curve, so
          // the genus budget must absorb another node
          long surcharge = 0;
          int two_line_pts = 0;
          long excess = 0;
          for (const auto& ep : asg.points) {
            if (ep.lines.size() == 2) {
              ++two_line_pts;
              if (ep.contacts[0] >= 2 && ep.contacts[1] >= 2) surcharge += 2;
            }
            for (int c : ep.contacts) excess += c - 1;
          }
          if (genus_lhs < genus_rhs + surcharge) continue;
          // extended general position: the two-line points are determined by
          // the configuration, so they count as special incidences
          if (d == 1 && positive + two_line_pts > 2) continue;
          if (d == 2 && positive + two_line_pts + excess > 5) continue;

          MultiplicityProfile p;
          p.d = d;
          p.m = m;
          p.q = q;
          p.extra_points = asg.points;
          p.genus_slack = genus_lhs - genus_rhs;
          MultiplicityProfile canon = canonical_form(p);
          ProfileKey key = encode(canon);
          if (seen.insert(key).second) out.push_back(canon);
        }
        return;
      }
      for (int v = 0; v <= d; ++v) {
        m[static_cast<size_t>(pos)] = v;
        rec(pos + 1);
      }
      m[static_cast<size_t>(pos)] = 0;
    };
    rec(0);
  }
  std::sort(out.begin(), out.end(), [](const MultiplicityProfile& a, const MultiplicityProfile& b) {
    if (a.d != b.d) return a.d < b.d;
    return encode(a) < encode(b);
  });
  return out;
}

bool verify_inequality_reduction(int bound) {
  if (bound < 1) throw Error(ErrorCode::InvalidInput, "bound must be >= 1");
  for (int m1 = 0; m1 <= bound; ++m1)
    for (int m2 = 0; m2 <= bound; ++m2) {
      long d = m1 + m2;
      long lhs = (d - 1) * (d - 2);
      long rhs = 3L * m1 * (m1 - 1) + 3L * m2 * (m2 - 1);
      bool genus_holds = lhs >= rhs;
      long reduced = -static_cast<long>(m1 - m2) * (m1 - m2) - (m1 + m2) + 2;
      bool reduced_holds = reduced >= 0;
      if (genus_holds != reduced_holds) return false;
    }
  return true;
}

ExceptionalLocusReport exceptional_components(const SixPointConfig& config) {
  ExceptionalLocusReport rep;
  rep.genericity = extra_genericity_check(config);
  if (!rep.genericity.general_position)
    throw Error(ErrorCode::InvalidInput, "configuration not in general position");

  auto lines = lines_27();
  for (const auto& [label, cls] : lines) {
    if (label.kind == LineLabel::Kind::Chord && config.is_hexagon_chord(label.i, label.j))
      continue;  // the six boundary components
    ExceptionalComponent comp;
    comp.label = label;
    comp.cls = cls;
    CurveOnSurface curve = CurveOnSurface::exceptional(1);
    switch (label.kind) {
      case LineLabel::Kind::Exceptional:
        curve = CurveOnSurface::exceptional(label.i);
        break;
      case LineLabel::Kind::Chord: {
        HomogPoly line_poly = HomogPoly::linear(config.chord(label.i, label.j));
        curve = CurveOnSurface::strict_transform(line_poly, config);
        comp.plane_curve = line_poly;
        break;
      }
      case LineLabel::Kind::Conic: {
        std::vector<PointCondition> conds;
        for (int k = 1; k <= 6; ++k)
          if (k != label.i) conds.push_back({config.point(k), 1});
        auto sys = linear_system(2, conds);
        if (sys.kernel_dimension != 1)
          throw Error(ErrorCode::InternalInconsistency,
                      "five-point conic system has unexpected dimension");
        curve = CurveOnSurface::strict_transform(sys.basis[0], config);
        comp.plane_curve = sys.basis[0];
        break;
      }
    }
    if (!(curve.divisor_class() == cls))
      throw Error(ErrorCode::InternalInconsistency,
                  "realized curve class differs from the lattice class");
    comp.support = pullback_support(curve, config);
    comp.type = curve_type(comp.support, true);
    rep.components.push_back(std::move(comp));
  }
  if (rep.components.size() != 21)
    throw Error(ErrorCode::InternalInconsistency, "expected exactly 21 components");

  // degenerate detectors: a doubly-concurrent boundary supports a pencil of
  // cubics whose nodal members are certified extra components
  DivisorD D = divisor_D(config);
  if (D.h1_concurrent && D.h2_concurrent) {
    for (auto& cert : triple_point_pencil_certificates(config))
      rep.extra_components.push_back(std::move(cert));
  }
  return rep;
}

Classification classify_curve(const HomogPoly& C, const SixPointConfig& config) {
  if (C.is_zero() || C.degree() > 2)
    throw Error(ErrorCode::InvalidInput, "classification covers curves of degree <= 2");
  for (int k = 0; k < 6; ++k) {
    LineRestriction r = restrict_to_line(C, config.hexagon_line(k));
    if (r.is_component)
      throw Error(ErrorCode::ComponentOfD, "curve contains a boundary line");
  }
  Classification out;
  out.kind = Classification::Kind::NotExceptional;
  CurveOnSurface curve = CurveOnSurface::strict_transform(C, config);
  out.support = pullback_support(curve, config);
  const auto& st = std::get<CurveOnSurface::StrictTransform>(curve.value);
  std::vector<int> on;
  for (int i = 1; i <= 6; ++i)
    if (st.mult[static_cast<size_t>(i - 1)] >= 1) on.push_back(i);

  if (C.degree() == 1 && on.size() == 2) {
    out.kind = Classification::Kind::ChordThroughTwoCenters;
    out.i = on[0];
    out.j = on[1];
    return out;
  }
  if (C.degree() == 2 && on.size() == 5) {
    int missing = 21;
    for (int i : on) missing -= i;
    out.kind = Classification::Kind::ConicThroughFiveCenters;
    out.i = missing;
    return out;
  }
  std::ostringstream os;
  os << "support over the closure is " << out.support.count_closure << " through "
     << on.size() << " centers";
  out.reason = os.str();
  if (out.support.count_closure <= 2 && extra_genericity_check(config).all_hold())
    throw Error(ErrorCode::InternalInconsistency,
                "small support outside the generic families on a generic configuration");
  return out;
}

}  // namespace cubic27
