#pragma once

#include <optional>
#include <variant>

#include "cubic27/certificate.hpp"
#include "cubic27/config.hpp"
#include "cubic27/parametrize.hpp"
#include "cubic27/pencil.hpp"
#include "cubic27/surface.hpp"

namespace cubic27 {

// -------- affine-line degenerations --------

struct AffineLineWitness {
  int chord_i = 0;
  int chord_j = 0;
  int hex_line_1 = 0;  // 0-based hexagon indices of the pair meeting at R
  int hex_line_2 = 0;
  ProjPoint R;
};

struct AffineLineBuild {
  SixPointConfig config;
  AffineLineWitness witness;
};

/// Forces the chord through P1 and P4 to meet the boundary in a single
/// point: R = l23 ^ l14 becomes a point of l56 by placing P6 on the line
/// through P5 and R. Scans rational positions for P6 until the six points
/// are in general position.
std::variant<AffineLineBuild, std::string> build_affine_line_config(
    const std::array<ProjPoint, 5>& p1_to_p5, int scan_range = 60);

/// All triple incidences "meet of two hexagon lines lies on a chord avoiding
/// their centers".
std::vector<AffineLineWitness> detect_affine_line_witnesses(const SixPointConfig& config);

// -------- triple-point configurations and their cubic pencils --------

struct TriplePointBuild {
  SixPointConfig config;
  ProjPoint R1;  // common point of l12, l34, l56
  ProjPoint R2;  // common point of l23, l45, l61
};

/// Configuration in general position whose two boundary triangles are both
/// concurrent. P5 is scanned over a deterministic list until the general
/// position check passes.
TriplePointBuild build_triple_point_config();

/// Certified nodal members of the pencil of cubics through the six centers
/// and the two triple points of a doubly-concurrent configuration.
std::vector<ExtraCurveCertificate> triple_point_pencil_certificates(const SixPointConfig& config);

// -------- nodal cubic configurations --------

struct NodalCubicBuild {
  SixPointConfig config;
  ExtraCurveCertificate certificate;
  ProjPoint R1;
  ProjPoint R2;
  WitnessPolynomial condition;  // the parameter condition that P2 satisfies
};

/// Fixes P1, P3..P6, computes R2 = l34 ^ l56, builds the pencil of cubics
/// with a node at P1 through P3..P6 and R2, and hunts for a rational point
/// P2 on a nodal member such that R1 = (line(P2,P3) ^ l45) also lies on the
/// member. Returns the witness configuration or the exact condition
/// polynomial as an honest negative.
std::variant<NodalCubicBuild, WitnessPolynomial> build_nodal_cubic_config(
    const ProjPoint& p1, const std::array<ProjPoint, 4>& p3_to_p6, int member_scan = 24);

/// Seed points for which the nodal-cubic construction is known to succeed.
std::pair<ProjPoint, std::array<ProjPoint, 4>> standard_nodal_cubic_seeds();

// -------- trinodal quartic configurations --------

struct QuarticWitness {
  SixPointConfig config;
  ExtraCurveCertificate certificate;
  ProjPoint Q1;  // boundary point on l23 and l45
  ProjPoint Q2;  // boundary point on l34 and l56
};

struct QuarticSearchResult {
  std::vector<QuarticWitness> witnesses;
  std::vector<WitnessPolynomial> conditions;   // emitted condition polynomials
  std::vector<std::string> notes;
};

/// Searches for configurations realizing a trinodal quartic as an extra
/// component: nodes at P1, P2, P6, simple points P3..P5, and the two
/// boundary points at hexagon crossings with one tangency each. Witnesses
/// are fully re-verified; the exact conditions are returned either way.
QuarticSearchResult quartic_witness_search(const HomogPoly& Q, int scan_range = 8);

/// A trinodal quartic with nodes at the coordinate points, symmetric under
/// swapping y and z, for which the witness search is known to succeed.
HomogPoly standard_trinodal_quartic();

/// Builds the frozen quartic witness configuration and certificate directly.
std::optional<QuarticWitness> standard_quartic_certificate();

// -------- certificate verification --------

VerificationReport verify_extra_curve_certificate(const SixPointConfig& config,
                                                  const ExtraCurveCertificate& cert);

}  // namespace cubic27
