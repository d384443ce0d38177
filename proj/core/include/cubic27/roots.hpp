#pragma once

#include <vector>

#include "cubic27/poly.hpp"

namespace cubic27 {

struct RationalRoot {
  Rational value;
  int multiplicity = 1;
};

/// All rational roots of p with multiplicities, found by exact integer root
/// isolation on the monicized polynomial (Sturm chains over Z, no floating
/// point, no integer factorization). Complete: a polynomial reported rootless
/// has no rational roots.
std::vector<RationalRoot> rational_roots(const IPoly& p);
std::vector<RationalRoot> rational_roots(const QPoly& p);

/// Number of distinct complex roots: deg p - deg gcd(p, p').
int distinct_root_count_closure(const IPoly& p);

/// Number of distinct real roots in (a, b), endpoints assumed non-roots.
int sturm_count_open(const std::vector<IPoly>& chain, const Int& a, const Int& b);

/// Generalized Sturm chain of a squarefree integer polynomial (primitive
/// pseudo-remainders scaled by positive constants only).
std::vector<IPoly> sturm_chain(const IPoly& squarefree);

/// Exact Lagrange interpolation through distinct sample abscissae.
QPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& samples);

}  // namespace cubic27
