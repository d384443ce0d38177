#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubic27/projective.hpp"

namespace cubic27 {

/// One genericity predicate outcome. `witness` carries the offending object
/// when the predicate fails (a point for incidence predicates, indices for
/// collinearity).
struct PredicateResult {
  std::string id;
  bool holds = true;
  std::vector<int> indices;            // involved point/line indices (1-based)
  std::optional<ProjPoint> witness;
};

struct GenericityReport {
  bool general_position = false;
  std::optional<std::array<int, 3>> failing_triple;   // first collinear triple
  bool distinct = true;
  bool conic_free = true;                              // no conic through all six
  std::vector<PredicateResult> predicate_results;
  bool all_hold() const;
};

/// Six blow-up centers plus the cached boundary lines. The hexagon is
/// ordered l12, l23, l34, l45, l56, l61; chords are all 15 connecting lines.
class SixPointConfig {
 public:
  static SixPointConfig create(const std::array<ProjPoint, 6>& points);  // throws on bad input

  const std::array<ProjPoint, 6>& points() const { return points_; }
  const ProjPoint& point(int i) const { return points_[static_cast<size_t>(i - 1)]; }

  // Hexagon line k (0-based) joins centers k+1 and k+2 (mod 6, 1-based).
  const std::array<ProjLine, 6>& hexagon() const { return hexagon_; }
  const ProjLine& hexagon_line(int k) const { return hexagon_[static_cast<size_t>(k)]; }
  static std::pair<int, int> hexagon_centers(int k);  // 1-based center pair of hexagon line k

  const ProjLine& chord(int i, int j) const;  // 1 <= i < j <= 6
  bool is_hexagon_chord(int i, int j) const;

 private:
  SixPointConfig() = default;
  std::array<ProjPoint, 6> points_;
  std::array<ProjLine, 6> hexagon_;
  std::array<ProjLine, 15> chords_;  // lex order over pairs (i,j), i<j
};

/// Distinctness, the 20 collinearity triples and the six-point conic test.
GenericityReport general_position_check(const std::array<ProjPoint, 6>& points);

/// The finite extra-genericity predicate list:
///   (a) neither boundary triangle is concurrent;
///   (b) for two disjoint hexagon lines and a chord avoiding their four
///       centers, the intersection point of the pair is off the chord;
///   (c) no intersection point of two hexagon lines lies on a third one.
GenericityReport extra_genericity_check(const SixPointConfig& config);

/// A frozen configuration passing general position and every extra
/// genericity predicate; the default input for the generic-case pipeline.
SixPointConfig standard_config();

/// The six points used across the documentation examples
/// (1:0:0),(0:1:0),(0:0:1),(1:1:1),(1:2:3),(1:4:9).
std::array<ProjPoint, 6> example_points();

}  // namespace cubic27
