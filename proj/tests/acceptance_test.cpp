// Acceptance suite: one line per criterion, exact checks only.
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "cubic27/degenerate.hpp"
#include "cubic27/exceptional.hpp"
#include "cubic27/io.hpp"
#include "cubic27/linear_system.hpp"

using namespace cubic27;

namespace {
int failures = 0;

void criterion(int number, const char* title, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = e.what();
  }
  if (!ok) ++failures;
  std::printf("CRITERION %d: %s - %s%s%s\n", number, ok ? "PASS" : "FAIL", title,
              note.empty() ? "" : " : ", note.c_str());
  std::fflush(stdout);
}

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
}  // namespace

int main() {
  criterion(1, "27 lines, self-intersection -1, ten neighbors in five disjoint pairs", [] {
    auto lines = lines_27();
    if (lines.size() != 27) return false;
    for (const auto& [label, cls] : lines)
      if (pairing(cls, cls) != -1) return false;
    auto rep = incidence_report();
    if (!rep.counts_verified) return false;
    for (const auto& li : rep.lines)
      if (li.neighbors.size() != 10 || li.triangles.size() != 5) return false;
    // the box search provides the independent enumeration of the classes
    auto box = line_class_box_search();
    if (box.size() != 27) return false;
    for (const auto& [label, cls] : lines) {
      bool present = false;
      for (const auto& c : box) present = present || c == cls;
      if (!present) return false;
    }
    return true;
  });

  criterion(2, "generic case: 21 components, all Gm, lattice equals geometry", [] {
    auto rep = exceptional_components(standard_config());
    if (!rep.genericity.all_hold()) return false;
    if (rep.components.size() != 21) return false;
    for (const auto& c : rep.components) {
      if (c.type != CurveType::Gm) return false;
      if (c.support.count_closure != 2) return false;
      if (c.support.total_degree_geometric != c.support.total_degree_lattice) return false;
    }
    return true;
  });

  criterion(3, "degree-bound search returns exactly the four families", [] {
    auto profiles = degree_bound_search(5);
    if (profiles.size() != 5) return false;
    int d1 = 0, d2 = 0, d3 = 0, d4 = 0;
    for (const auto& p : profiles) {
      auto positive = [&] {
        int n = 0;
        for (int v : p.m) n += v > 0 ? 1 : 0;
        return n;
      }();
      switch (p.d) {
        case 1:
          if (positive != 2) return false;
          ++d1;
          break;
        case 2:
          if (!same_orbit(p.m, {0, 1, 1, 1, 1, 1})) return false;
          ++d2;
          break;
        case 3:
          if (!same_orbit(p.m, {2, 1, 1, 1, 1, 1})) return false;
          ++d3;
          break;
        case 4:
          if (!same_orbit(p.m, {2, 2, 1, 1, 1, 2})) return false;
          ++d4;
          break;
        default:
          return false;
      }
    }
    return d1 == 2 && d2 == 1 && d3 == 1 && d4 == 1;
  });

  criterion(4, "genus reduction equivalent to the quadratic bound on the 0..10 grid", [] {
    return verify_inequality_reduction(10);
  });

  criterion(5, "affine-line degeneration: support one, detected exactly once", [] {
    std::array<ProjPoint, 5> seeds = {ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1),
                                      ProjPoint(1, 1, 1), ProjPoint(1, 2, 5)};
    auto result = build_affine_line_config(seeds);
    if (!std::holds_alternative<AffineLineBuild>(result)) return false;
    const auto& build = std::get<AffineLineBuild>(result);
    if (!general_position_check(build.config.points()).general_position) return false;
    auto rep = exceptional_components(build.config);
    int affine = 0;
    for (const auto& c : rep.components) {
      if (c.label == LineLabel::chord(1, 4)) {
        if (c.support.count_closure != 1 || c.type != CurveType::AffineLine) return false;
      } else if (c.type == CurveType::AffineLine) {
        return false;
      }
      if (c.type == CurveType::AffineLine) ++affine;
    }
    if (affine != 1) return false;
    auto witnesses = detect_affine_line_witnesses(build.config);
    return witnesses.size() == 1 && witnesses[0].chord_i == 1 && witnesses[0].chord_j == 4 &&
           witnesses[0].R == build.witness.R;
  });

  criterion(6, "cubic pencils: dimension two at the triple points, twelve singular members", [] {
    // the doubly-concurrent configuration carries a pencil through its eight
    // special points
    auto build = build_triple_point_config();
    std::vector<PointCondition> conds;
    for (int i = 1; i <= 6; ++i) conds.push_back({build.config.point(i), 1});
    conds.push_back({build.R1, 1});
    conds.push_back({build.R2, 1});
    if (linear_system(3, conds).kernel_dimension != 2) return false;
    // the shipped eight-point pencil fixture: six centers of the standard
    // configuration plus two frozen extra points, all in general position;
    // twelve distinct singular members over the closure
    auto cfg = standard_config();
    std::vector<PointCondition> fixture;
    for (int i = 1; i <= 6; ++i) fixture.push_back({cfg.point(i), 1});
    fixture.push_back({ProjPoint(3, 1, 5), 1});
    fixture.push_back({ProjPoint(1, 7, 2), 1});
    auto sys = linear_system(3, fixture);
    if (sys.kernel_dimension != 2) return false;
    auto rep = singular_members_of_pencil(sys.basis[0], sys.basis[1]);
    if (rep.degenerate) return false;
    if (!rep.discarded_candidates.empty()) return false;
    return rep.squarefree_degree == 12;
  });

  criterion(7, "shipped certificates: support two, node and tangency data, genus equality", [] {
    auto [p1, rest] = standard_nodal_cubic_seeds();
    auto nodal = build_nodal_cubic_config(p1, rest);
    if (!std::holds_alternative<NodalCubicBuild>(nodal)) return false;
    const auto& nb = std::get<NodalCubicBuild>(nodal);
    auto nrep = verify_extra_curve_certificate(nb.config, nb.certificate);
    if (!nrep.pass || nrep.support_closure != 2) return false;
    if (nrep.genus_lhs != 2 || nrep.genus_rhs != 2) return false;
    {  // node tangent directions avoid both boundary lines at P1
      TangentCone tc = tangent_cone(nb.certificate.curve, p1);
      for (const ProjLine& l : {nb.config.hexagon_line(0), nb.config.hexagon_line(5)}) {
        auto [u0, v0] = direction_in_chart(tc, p1, l);
        if (tc.cone.eval(Rational(u0), Rational(v0)) == 0) return false;
      }
    }
    auto quartic = standard_quartic_certificate();
    if (!quartic) return false;
    auto qrep = verify_extra_curve_certificate(quartic->config, quartic->certificate);
    if (!qrep.pass || qrep.support_closure != 2) return false;
    if (qrep.genus_lhs != 6 || qrep.genus_rhs != 6) return false;
    // tangency: each boundary point meets two lines with local degrees 1 and 2
    auto sup = pullback_support(
        CurveOnSurface::strict_transform(quartic->certificate.curve, quartic->config),
        quartic->config);
    if (sup.points.size() != 2) return false;
    for (const auto& sp : sup.points)
      if (sp.hexagon_lines.size() != 2 || sp.local_degree != 3) return false;
    return true;
  });

  criterion(8, "property suites: invariance, conservation, dual paths, round trips", [] {
    std::mt19937_64 rng(20260810);
    std::uniform_int_distribution<long> coord(-60, 60), den(1, 9), deg(1, 4), c8(-8, 8);
    auto rnd_rational = [&] { return make_rational(Int(coord(rng)), Int(den(rng))); };
    auto rnd_point = [&](long bound) {
      std::uniform_int_distribution<long> d(-bound, bound);
      while (true) {
        std::array<Int, 3> c{Int(d(rng)), Int(d(rng)), Int(d(rng))};
        if (c[0] != 0 || c[1] != 0 || c[2] != 0) return ProjPoint(c);
      }
    };
    // (a) 500 rescalings leave normalize, collinear, multiplicity invariant
    int done = 0;
    while (done < 500) {
      std::array<Rational, 3> raw{rnd_rational(), rnd_rational(), rnd_rational()};
      if (raw[0] == 0 && raw[1] == 0 && raw[2] == 0) continue;
      Rational s = rnd_rational();
      if (s == 0) continue;
      std::array<Rational, 3> scaled;
      for (size_t i = 0; i < 3; ++i) scaled[i] = raw[i] * s;
      if (!(normalize(raw) == normalize(scaled))) return false;
      ProjPoint p = rnd_point(20), q = rnd_point(20), r = rnd_point(20);
      std::array<Rational, 3> qs;
      for (size_t i = 0; i < 3; ++i) qs[i] = Rational(q[static_cast<int>(i)]) * s;
      if (collinear(p, q, r) != collinear(p, normalize(qs), r)) return false;
      std::map<Monomial, Rational> cm;
      for (const auto& m : monomials_of_degree(3)) {
        long v = c8(rng);
        if (v != 0) cm[m] = Rational(v);
      }
      if (cm.empty()) continue;
      HomogPoly F(3, std::move(cm));
      if (multiplicity_at(F, p) != multiplicity_at(F * s, p)) return false;
      ++done;
    }
    // (b) 200 random curve/line pairs conserve the restriction degree
    done = 0;
    while (done < 200) {
      int degree = static_cast<int>(deg(rng));
      std::map<Monomial, Rational> cm;
      for (const auto& m : monomials_of_degree(degree)) {
        long v = c8(rng);
        if (v != 0) cm[m] = Rational(v);
      }
      if (cm.empty()) continue;
      HomogPoly F(degree, std::move(cm));
      ProjPoint a = rnd_point(15), b = rnd_point(15);
      if (a == b) continue;
      LineRestriction rr = restrict_to_line(F, line_through(a, b));
      if (rr.is_component) continue;
      auto roots = distinct_root_count(rr.form);
      int rational_mult = 0;
      for (const auto& root : roots.rational) {
        rational_mult += root.multiplicity;
        ProjPoint pt = rr.point_at(root.s, root.t);
        if (F.eval(pt) != 0) return false;
      }
      if (rational_mult > degree) return false;
      ++done;
    }
    // (c) dual-path agreement on 50 random general-position configurations
    done = 0;
    while (done < 50) {
      std::array<ProjPoint, 6> pts;
      for (auto& p : pts) p = rnd_point(30);
      if (!general_position_check(pts).general_position) continue;
      auto rep = exceptional_components(SixPointConfig::create(pts));
      for (const auto& c : rep.components)
        if (c.support.total_degree_geometric != c.support.total_degree_lattice) return false;
      ++done;
    }
    // (d) every emitted certificate re-verifies through the document format
    auto [p1, rest] = standard_nodal_cubic_seeds();
    auto nodal = build_nodal_cubic_config(p1, rest);
    if (!std::holds_alternative<NodalCubicBuild>(nodal)) return false;
    const auto& nb = std::get<NodalCubicBuild>(nodal);
    auto doc = certificate_document_json(nb.config, nb.certificate);
    auto parsed = parse_certificate_document(doc);
    if (!verify_extra_curve_certificate(parsed.config, parsed.certificate).pass) return false;
    auto quartic = standard_quartic_certificate();
    if (!quartic) return false;
    auto qdoc = certificate_document_json(quartic->config, quartic->certificate);
    auto qparsed = parse_certificate_document(qdoc);
    if (!verify_extra_curve_certificate(qparsed.config, qparsed.certificate).pass) return false;
    return true;
  });

  if (failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
