#include "cubic27/config.hpp"

#include <sstream>

namespace cubic27 {

bool GenericityReport::all_hold() const {
  if (!general_position) return false;
  for (const auto& p : predicate_results)
    if (!p.holds) return false;
  return true;
}

namespace {
int chord_index(int i, int j) {
  // lex order over pairs (i,j), 1 <= i < j <= 6
  static const int base[5] = {0, 5, 9, 12, 14};
  return base[i - 1] + (j - i - 1);
}
}  // namespace

std::pair<int, int> SixPointConfig::hexagon_centers(int k) {
  int i = k + 1;
  int j = (k + 1) % 6 + 1;
  return {i, j};
}

SixPointConfig SixPointConfig::create(const std::array<ProjPoint, 6>& points) {
  auto report = general_position_check(points);
  if (!report.general_position) {
    std::ostringstream os;
    os << "six points not in general position";
    if (report.failing_triple) {
      os << " (collinear triple " << (*report.failing_triple)[0] << ","
         << (*report.failing_triple)[1] << "," << (*report.failing_triple)[2] << ")";
    } else if (!report.conic_free) {
      os << " (all six on a conic)";
    }
    throw Error(ErrorCode::InvalidInput, os.str());
  }
  SixPointConfig c;
  c.points_ = points;
  for (int k = 0; k < 6; ++k) {
    auto [i, j] = hexagon_centers(k);
    c.hexagon_[static_cast<size_t>(k)] = line_through(c.point(i), c.point(j));
  }
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      c.chords_[static_cast<size_t>(chord_index(i, j))] = line_through(c.point(i), c.point(j));
  return c;
}

const ProjLine& SixPointConfig::chord(int i, int j) const {
  if (i > j) std::swap(i, j);
  return chords_[static_cast<size_t>(chord_index(i, j))];
}

bool SixPointConfig::is_hexagon_chord(int i, int j) const {
  if (i > j) std::swap(i, j);
  return (j == i + 1) || (i == 1 && j == 6);
}

GenericityReport general_position_check(const std::array<ProjPoint, 6>& points) {
  GenericityReport rep;
  rep.general_position = true;
  for (int i = 0; i < 6 && rep.distinct; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (points[static_cast<size_t>(i)] == points[static_cast<size_t>(j)]) {
        rep.distinct = false;
        rep.general_position = false;
        PredicateResult r;
        r.id = "distinct";
        r.holds = false;
        r.indices = {i + 1, j + 1};
        rep.predicate_results.push_back(r);
        break;
      }
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) {
        bool coll = collinear(points[static_cast<size_t>(i)], points[static_cast<size_t>(j)],
                              points[static_cast<size_t>(k)]);
        if (coll) {
          rep.general_position = false;
          if (!rep.failing_triple) rep.failing_triple = {i + 1, j + 1, k + 1};
          PredicateResult r;
          r.id = "collinear";
          r.holds = false;
          r.indices = {i + 1, j + 1, k + 1};
          rep.predicate_results.push_back(r);
        }
      }
  if (rep.distinct && conic_determinant(points) == 0) {
    rep.conic_free = false;
    rep.general_position = false;
    PredicateResult r;
    r.id = "conic";
    r.holds = false;
    r.indices = {1, 2, 3, 4, 5, 6};
    rep.predicate_results.push_back(r);
  }
  return rep;
}

GenericityReport extra_genericity_check(const SixPointConfig& config) {
  GenericityReport rep = general_position_check(config.points());
  const auto& hex = config.hexagon();

  // (a) the two triangles of the boundary divisor
  {
    PredicateResult r;
    r.id = "a:triangle-l12-l34-l56";
    r.holds = !concurrent(hex[0], hex[2], hex[4]);
    if (!r.holds) r.witness = meet_lines(hex[0], hex[2]);
    rep.predicate_results.push_back(r);
  }
  {
    PredicateResult r;
    r.id = "a:triangle-l23-l45-l61";
    r.holds = !concurrent(hex[1], hex[3], hex[5]);
    if (!r.holds) r.witness = meet_lines(hex[1], hex[3]);
    rep.predicate_results.push_back(r);
  }

  // (b) two disjoint hexagon lines and the chord joining the two remaining
  // centers: their meet must avoid the chord. Nine disjoint pairs exist,
  // each leaving exactly one admissible chord.
  for (int k1 = 0; k1 < 6; ++k1) {
    for (int k2 = k1 + 1; k2 < 6; ++k2) {
      auto [a1, a2] = SixPointConfig::hexagon_centers(k1);
      auto [b1, b2] = SixPointConfig::hexagon_centers(k2);
      bool share = a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2;
      if (share) continue;
      int rem[2];
      int n = 0;
      for (int i = 1; i <= 6; ++i)
        if (i != a1 && i != a2 && i != b1 && i != b2) rem[n++] = i;
      ProjPoint R = meet_lines(hex[static_cast<size_t>(k1)], hex[static_cast<size_t>(k2)]);
      PredicateResult r;
      std::ostringstream os;
      os << "b:l" << a1 << a2 << "^l" << b1 << b2 << "-off-chord" << rem[0] << rem[1];
      r.id = os.str();
      r.indices = {rem[0], rem[1]};
      r.holds = !incident(R, config.chord(rem[0], rem[1]));
      if (!r.holds) r.witness = R;
      rep.predicate_results.push_back(r);
    }
  }

  // (c) the meet of two hexagon lines never lies on a third hexagon line
  for (int k1 = 0; k1 < 6; ++k1) {
    for (int k2 = k1 + 1; k2 < 6; ++k2) {
      if (hex[static_cast<size_t>(k1)] == hex[static_cast<size_t>(k2)]) continue;
      ProjPoint R = meet_lines(hex[static_cast<size_t>(k1)], hex[static_cast<size_t>(k2)]);
      PredicateResult r;
      std::ostringstream os;
      os << "c:l" << k1 + 1 << "^l" << k2 + 1;
      r.id = os.str();
      r.holds = true;
      for (int k3 = 0; k3 < 6; ++k3) {
        if (k3 == k1 || k3 == k2) continue;
        if (incident(R, hex[static_cast<size_t>(k3)])) {
          r.holds = false;
          r.witness = R;
          r.indices = {k1 + 1, k2 + 1, k3 + 1};
          break;
        }
      }
      rep.predicate_results.push_back(r);
    }
  }
  return rep;
}

std::array<ProjPoint, 6> example_points() {
  return {ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1),
          ProjPoint(1, 1, 1), ProjPoint(1, 2, 3), ProjPoint(1, 4, 9)};
}

SixPointConfig standard_config() {
  // Frozen after checking every general-position and extra-genericity
  // predicate exactly; see tests/config_test.cpp.
  std::array<ProjPoint, 6> pts = {ProjPoint(1, 0, 0), ProjPoint(0, 1, 0),
                                  ProjPoint(0, 0, 1), ProjPoint(1, 1, 1),
                                  ProjPoint(2, 5, 11), ProjPoint(7, 3, 2)};
  return SixPointConfig::create(pts);
}

}  // namespace cubic27
