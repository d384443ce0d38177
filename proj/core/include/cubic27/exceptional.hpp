#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubic27/certificate.hpp"
#include "cubic27/surface.hpp"

namespace cubic27 {

/// Boundary-intersection pattern of a candidate plane curve: degree, center
/// multiplicities, extra intersection degree per hexagon line, and the
/// placement of the at most two boundary points carrying that extra degree.
struct MultiplicityProfile {
  int d = 1;
  std::array<int, 6> m{0, 0, 0, 0, 0, 0};
  std::array<int, 6> q{0, 0, 0, 0, 0, 0};
  struct ExtraPoint {
    std::vector<int> lines;     // 0-based hexagon lines carrying the point (1 or 2)
    std::vector<int> contacts;  // local intersection degree on each line (>= 1)
  };
  std::vector<ExtraPoint> extra_points;
  long genus_slack = 0;  // (d-1)(d-2) - sum m_i(m_i - 1)

  std::string str() const;
};

/// Exhaustive enumeration of boundary-compatible profiles up to degree
/// d_max, deduplicated modulo the dihedral symmetry of the hexagon.
/// allow_tangency permits local contact >= 2 at the extra points.
std::vector<MultiplicityProfile> degree_bound_search(int d_max, bool allow_tangency = true);

/// Checks on the whole grid 0 <= m1, m2 <= bound that the genus inequality,
/// under the substitution d = m1 + m2 and (m1, m2, m1, m2, m1, m2), holds
/// exactly when -(m1 - m2)^2 - (m1 + m2) + 2 >= 0.
bool verify_inequality_reduction(int bound);

struct ExceptionalComponent {
  LineLabel label;
  DivClass cls;
  std::optional<HomogPoly> plane_curve;  // empty for exceptional curves
  SupportReport support;
  CurveType type = CurveType::Gm;
};

struct ExceptionalLocusReport {
  std::vector<ExceptionalComponent> components;       // exactly 21
  std::vector<ExtraCurveCertificate> extra_components;
  GenericityReport genericity;
};

/// The 21 lines outside the boundary with their supports, computed through
/// both the lattice pairing and the plane geometry, plus certified extra
/// components on degenerate configurations.
ExceptionalLocusReport exceptional_components(const SixPointConfig& config);

struct Classification {
  enum class Kind { ChordThroughTwoCenters, ConicThroughFiveCenters, NotExceptional } kind;
  int i = 0;
  int j = 0;
  std::string reason;
  SupportReport support;
};

/// Places a curve of degree <= 2 within the generic-case component families.
Classification classify_curve(const HomogPoly& C, const SixPointConfig& config);

}  // namespace cubic27
