#pragma once

#include <vector>

#include "cubic27/homog_poly.hpp"

namespace cubic27 {

struct PointCondition {
  ProjPoint point;
  int multiplicity = 1;
};

struct LinearSystemBasis {
  int degree = 0;
  std::vector<PointCondition> conditions;
  std::vector<HomogPoly> basis;       // primitive integer representatives
  int kernel_dimension = 0;
};

/// Degree-d plane curves with prescribed multiplicities: each (p, m)
/// contributes the m(m+1)/2 vanishing conditions of the order-(m-1) partial
/// derivatives at p. The kernel is computed by fraction-free elimination.
LinearSystemBasis linear_system(int degree, const std::vector<PointCondition>& conditions);

/// Exact kernel of an integer matrix (rows x cols), as primitive integer
/// column vectors in deterministic order.
std::vector<std::vector<Int>> integer_kernel(const std::vector<std::vector<Int>>& rows,
                                             size_t cols);

/// Row of the linear condition "D^(order) F (p) = 0" over the degree-d
/// monomial basis. Accepts raw (not necessarily primitive) coordinates.
std::vector<Int> derivative_condition_row(int degree, const Monomial& order,
                                          const std::array<Int, 3>& point);

}  // namespace cubic27
