#pragma once

#include <array>
#include <string>
#include <vector>

#include "cubic27/numbers.hpp"

namespace cubic27 {

/// Divisor class in the blow-up basis e0, e1..e6 with the signature (1,6)
/// pairing. Coefficients are stored raw: the class d*e0 - sum m_i e_i has
/// e0 = d and e[i] = -m_i.
struct DivClass {
  long e0 = 0;
  std::array<long, 6> e{0, 0, 0, 0, 0, 0};

  bool operator==(const DivClass& o) const { return e0 == o.e0 && e == o.e; }
  DivClass operator+(const DivClass& o) const {
    DivClass r;
    r.e0 = e0 + o.e0;
    for (size_t i = 0; i < 6; ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }
  std::string str() const;
};

long pairing(const DivClass& a, const DivClass& b);

inline DivClass canonical_class() { return DivClass{-3, {1, 1, 1, 1, 1, 1}}; }
inline DivClass hyperplane_class() { return DivClass{3, {-1, -1, -1, -1, -1, -1}}; }

/// (d; m_1..m_6) under the convention class = d*e0 - sum m_i e_i.
DivClass strict_transform_class(long d, const std::array<long, 6>& m);

struct LineLabel {
  enum class Kind { Exceptional, Chord, Conic } kind = Kind::Exceptional;
  int i = 1;  // 1-based
  int j = 0;  // second index for chords (i < j)

  static LineLabel exceptional(int i) { return {Kind::Exceptional, i, 0}; }
  static LineLabel chord(int i, int j) { return {Kind::Chord, i, j}; }
  static LineLabel conic(int i) { return {Kind::Conic, i, 0}; }
  bool operator==(const LineLabel& o) const { return kind == o.kind && i == o.i && j == o.j; }
  std::string str() const;
};

/// The 27 line classes: E_i, the chords e0 - e_i - e_j, and the conic
/// transforms 2e0 - sum_{k != i} e_k, in a fixed deterministic order.
std::vector<std::pair<LineLabel, DivClass>> lines_27();

struct LineIncidence {
  LineLabel label;
  DivClass cls;
  std::vector<int> neighbors;                 // indices into lines_27(), size 10
  std::vector<std::pair<int, int>> triangles; // 5 disjoint coplanar pairs
};

struct IncidenceReport {
  std::vector<LineIncidence> lines;  // size 27
  bool counts_verified = false;      // 10 neighbors, 5 disjoint pairs each
};

IncidenceReport incidence_report();

/// Exhaustive search for classes with L.L = -1 and L.(-K) = 1 over the box
/// e0 in {0,1,2}, e_i in {-1,0,1}; used to cross-check lines_27.
///
/// The box suffices: writing L = (a; b_1..b_6), the two equations give
/// sum b_i = 1 - 3a and sum b_i^2 = a^2 + 1. Cauchy-Schwarz forces
/// 6(a^2+1) >= (1-3a)^2, i.e. 3a^2 - 6a - 5 <= 0, so a is 0, 1 or 2; for
/// each such a the same bound applied to five of the b_i confines every
/// coordinate to {-1,0,1}.
std::vector<DivClass> line_class_box_search();

}  // namespace cubic27
