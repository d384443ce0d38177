#include "cubic27/linear_system.hpp"

#include <algorithm>

namespace cubic27 {

namespace {

// Falling factorial n*(n-1)*...*(n-k+1).
Int falling(int n, int k) {
  Int r(1);
  for (int i = 0; i < k; ++i) r *= (n - i);
  return r;
}

std::vector<Int> make_primitive(std::vector<Int> v) {
  Int g(0);
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return v;
  for (const auto& x : v)
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  for (auto& x : v) x = exact_div(x, g);
  return v;
}

}  // namespace

std::vector<Int> derivative_condition_row(int d, const Monomial& order,
                                          const std::array<Int, 3>& point) {
  // Entry for monomial (i,j,k): i_(a) j_(b) k_(c) p_x^(i-a) p_y^(j-b) p_z^(k-c)
  auto mons = monomials_of_degree(d);
  std::vector<Int> row;
  row.reserve(mons.size());
  for (const auto& m : mons) {
    if (m[0] < order[0] || m[1] < order[1] || m[2] < order[2]) {
      row.push_back(Int(0));
      continue;
    }
    Int v = falling(m[0], order[0]) * falling(m[1], order[1]) * falling(m[2], order[2]);
    for (int e = 0; e < m[0] - order[0]; ++e) v *= point[0];
    for (int e = 0; e < m[1] - order[1]; ++e) v *= point[1];
    for (int e = 0; e < m[2] - order[2]; ++e) v *= point[2];
    row.push_back(v);
  }
  return row;
}

std::vector<std::vector<Int>> integer_kernel(const std::vector<std::vector<Int>>& rows_in,
                                             size_t cols) {
  // Fraction-free forward elimination (Bareiss) with column pivot tracking,
  // then back substitution over the rationals, cleared to primitive vectors.
  std::vector<std::vector<Int>> m = rows_in;
  const size_t nrows = m.size();
  std::vector<size_t> pivot_col;
  Int denom(1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < nrows; ++c) {
    size_t piv = r;
    while (piv < nrows && m[piv][c] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(m[piv], m[r]);
    for (size_t i = r + 1; i < nrows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        Int num = m[i][j] * m[r][c] - m[i][c] * m[r][j];
        m[i][j] = (denom == 1) ? num : exact_div(num, denom);
      }
      m[i][c] = 0;
    }
    denom = m[r][c];
    pivot_col.push_back(c);
    ++r;
  }
  const size_t rank = r;

  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<Int>> kernel;
  for (size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    // solve the upper-triangular system with x[free_c] = 1, other free = 0
    std::vector<Rational> x(cols, Rational(0));
    x[free_c] = 1;
    for (size_t k = rank; k-- > 0;) {
      size_t pc = pivot_col[k];
      Rational acc(0);
      for (size_t j = pc + 1; j < cols; ++j)
        if (x[j] != 0) acc += Rational(m[k][j]) * x[j];
      x[pc] = -acc / Rational(m[k][pc]);
    }
    Int l(1);
    for (const auto& v : x) l = lcm(l, v.get_den());
    std::vector<Int> iv(cols);
    for (size_t j = 0; j < cols; ++j) iv[j] = x[j].get_num() * exact_div(l, x[j].get_den());
    kernel.push_back(make_primitive(std::move(iv)));
  }
  return kernel;
}

LinearSystemBasis linear_system(int degree, const std::vector<PointCondition>& conditions) {
  if (degree < 1) throw Error(ErrorCode::InvalidInput, "degree must be >= 1");
  for (size_t i = 0; i < conditions.size(); ++i) {
    if (conditions[i].multiplicity < 1)
      throw Error(ErrorCode::InvalidInput, "multiplicity must be >= 1");
    for (size_t j = i + 1; j < conditions.size(); ++j)
      if (conditions[i].point == conditions[j].point)
        throw Error(ErrorCode::InvalidInput, "condition points must be distinct");
  }
  auto mons = monomials_of_degree(degree);
  std::vector<std::vector<Int>> rows;
  for (const auto& cond : conditions) {
    const int m = cond.multiplicity;
    // order-(m-1) partials; lower orders follow from these for forms
    for (int a = m - 1; a >= 0; --a)
      for (int b = m - 1 - a; b >= 0; --b)
        rows.push_back(
            derivative_condition_row(degree, {a, b, m - 1 - a - b}, cond.point.coords()));
  }
  auto kernel = integer_kernel(rows, mons.size());

  LinearSystemBasis out;
  out.degree = degree;
  out.conditions = conditions;
  out.kernel_dimension = static_cast<int>(kernel.size());
  for (const auto& vec : kernel) {
    std::map<Monomial, Rational> c;
    for (size_t i = 0; i < mons.size(); ++i)
      if (vec[i] != 0) c[mons[i]] = Rational(vec[i]);
    out.basis.emplace_back(degree, std::move(c));
  }
  return out;
}

}  // namespace cubic27
