#pragma once

#include <string>
#include <vector>

#include "cubic27/homog_poly.hpp"
#include "cubic27/poly.hpp"

namespace cubic27 {

/// A claim bundle for an extra exceptional curve: everything re-checkable by
/// the plane-curve machinery.
struct ExtraCurveCertificate {
  HomogPoly curve;
  struct Claim {
    ProjPoint point;
    int multiplicity = 1;
    bool node = false;
  };
  std::vector<Claim> claims;
  int claimed_support_closure = 2;
  std::string notes;
};

/// Exact univariate condition emitted by a search when no rational witness
/// exists (or alongside the witnesses it found).
struct WitnessPolynomial {
  std::string parameter;     // human-readable description of the parameter
  QPoly condition;           // vanishing locus = candidate witnesses
  std::vector<Rational> rational_roots;
};

struct VerificationReport {
  bool pass = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  int support_closure = -1;
  long genus_lhs = 0;  // (d-1)(d-2)
  long genus_rhs = 0;  // sum of m(m-1) over claimed singular points
};

}  // namespace cubic27
