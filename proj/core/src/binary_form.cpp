#include "cubic27/binary_form.hpp"

#include <algorithm>

namespace cubic27 {

BinaryForm::BinaryForm(int degree, std::vector<Rational> coeffs)
    : degree_(degree), c_(std::move(coeffs)) {
  if (degree_ < 0 || c_.size() != static_cast<size_t>(degree_) + 1)
    throw Error(ErrorCode::InvalidInput, "binary form coefficient count mismatch");
}

bool BinaryForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& v) { return v == 0; });
}

Rational BinaryForm::eval(const Rational& s, const Rational& t) const {
  if (degree_ < 0) return Rational(0);
  std::vector<Rational> spow(static_cast<size_t>(degree_) + 1), tpow(static_cast<size_t>(degree_) + 1);
  spow[0] = 1;
  tpow[0] = 1;
  for (int i = 1; i <= degree_; ++i) {
    spow[static_cast<size_t>(i)] = spow[static_cast<size_t>(i - 1)] * s;
    tpow[static_cast<size_t>(i)] = tpow[static_cast<size_t>(i - 1)] * t;
  }
  Rational acc(0);
  for (int i = 0; i <= degree_; ++i)
    acc += c_[static_cast<size_t>(i)] * spow[static_cast<size_t>(degree_ - i)] *
           tpow[static_cast<size_t>(i)];
  return acc;
}

Int BinaryForm::eval_int(const Int& s, const Int& t) const {
  return eval(Rational(s), Rational(t)).get_num();  // zero-tests on integer inputs
}

namespace {
// f = (t0*s - s0*t) * g, valid exactly when (s0:t0) is a root of f.
BinaryForm deflate_linear(const BinaryForm& f, const Int& s0, const Int& t0) {
  const int d = f.degree();
  std::vector<Rational> g(static_cast<size_t>(d), Rational(0));
  if (t0 != 0) {
    // f_i = t0*g_i - s0*g_{i-1}
    Rational inv_t0 = make_rational(1, t0);
    g[0] = f[0] * inv_t0;
    for (int i = 1; i <= d - 1; ++i)
      g[static_cast<size_t>(i)] =
          (f[static_cast<size_t>(i)] + Rational(s0) * g[static_cast<size_t>(i - 1)]) * inv_t0;
  } else {
    // root (1:0): f_0 = 0 and f_{i+1} = -s0 * g_i
    Rational inv_ms0 = make_rational(-1, s0);
    for (int i = 0; i <= d - 1; ++i)
      g[static_cast<size_t>(i)] = f[static_cast<size_t>(i + 1)] * inv_ms0;
  }
  return BinaryForm(d - 1, std::move(g));
}
}  // namespace

int BinaryForm::multiplicity_at(const Int& s0, const Int& t0) const {
  if (is_zero()) throw Error(ErrorCode::ZeroForm, "multiplicity in zero form");
  if (s0 == 0 && t0 == 0)
    throw Error(ErrorCode::InvalidHomogeneousCoordinates, "parameter (0,0)");
  BinaryForm f = *this;
  int mult = 0;
  while (f.degree() >= 1 && f.eval(Rational(s0), Rational(t0)) == 0) {
    f = deflate_linear(f, s0, t0);
    ++mult;
  }
  return mult;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
  std::vector<Rational> c(static_cast<size_t>(degree_ + o.degree_) + 1, Rational(0));
  for (int i = 0; i <= degree_; ++i)
    for (int j = 0; j <= o.degree_; ++j)
      c[static_cast<size_t>(i + j)] += c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
  return BinaryForm(degree_ + o.degree_, std::move(c));
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
  if (degree_ != o.degree_) throw Error(ErrorCode::InvalidInput, "degree mismatch");
  std::vector<Rational> c(c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
  return BinaryForm(degree_, std::move(c));
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const {
  if (degree_ != o.degree_) throw Error(ErrorCode::InvalidInput, "degree mismatch");
  std::vector<Rational> c(c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
  return BinaryForm(degree_, std::move(c));
}

BinaryForm BinaryForm::operator*(const Rational& s) const {
  std::vector<Rational> c(c_);
  for (auto& v : c) v *= s;
  return BinaryForm(degree_, std::move(c));
}

Rational binary_resultant(const BinaryForm& a, const BinaryForm& b) {
  const int n = a.degree(), m = b.degree();
  if (n < 0 || m < 0) throw Error(ErrorCode::ZeroForm, "resultant needs declared degrees");
  if (n == 0 && m == 0) return Rational(1);
  if (n == 0) return pow(a[0], static_cast<unsigned long>(m));
  if (m == 0) return pow(b[0], static_cast<unsigned long>(n));
  const size_t size = static_cast<size_t>(n + m);
  std::vector<std::vector<Rational>> mat(size, std::vector<Rational>(size, Rational(0)));
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i)
      mat[static_cast<size_t>(r)][static_cast<size_t>(r + i)] = a[static_cast<size_t>(i)];
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i)
      mat[static_cast<size_t>(m + r)][static_cast<size_t>(r + i)] = b[static_cast<size_t>(i)];
  Rational det(1);
  for (size_t col = 0; col < size; ++col) {
    size_t piv = col;
    while (piv < size && mat[piv][col] == 0) ++piv;
    if (piv == size) return Rational(0);
    if (piv != col) {
      std::swap(mat[piv], mat[col]);
      det = -det;
    }
    det *= mat[col][col];
    for (size_t r = col + 1; r < size; ++r) {
      if (mat[r][col] == 0) continue;
      Rational f = mat[r][col] / mat[col][col];
      for (size_t c = col; c < size; ++c) mat[r][c] -= f * mat[col][c];
    }
  }
  return det;
}

Rational BinaryForm::quadratic_discriminant() const {
  if (degree_ != 2) throw Error(ErrorCode::InvalidInput, "discriminant needs a quadratic");
  return c_[1] * c_[1] - Rational(4) * c_[0] * c_[2];
}

BinaryRootCount distinct_root_count(const BinaryForm& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroForm, "distinct_root_count of zero form");
  BinaryRootCount out;
  const int d = f.degree();
  if (d == 0) return out;
  // Dehomogenize at s = 1: p(t) = sum c_i t^i. Roots (1:t0) of f match roots
  // t0 of p; the degree drop is the multiplicity of the root at (0:1).
  QPoly p{std::vector<Rational>(f.coeffs().begin(), f.coeffs().end())};
  int inf_mult = d - p.degree();
  if (inf_mult > 0) out.rational.push_back({Int(0), Int(1), inf_mult});
  IPoly ip = to_integer_primitive(p);
  out.total_closure = (inf_mult > 0 ? 1 : 0) + distinct_root_count_closure(ip);
  for (const auto& r : rational_roots(ip)) {
    BinaryRoot br;
    br.s = r.value.get_den();
    br.t = r.value.get_num();
    br.multiplicity = r.multiplicity;
    out.rational.push_back(br);
  }
  std::sort(out.rational.begin(), out.rational.end(),
            [](const BinaryRoot& a, const BinaryRoot& b) {
              int c = cmp(a.s, b.s);
              if (c != 0) return c < 0;
              return cmp(a.t, b.t) < 0;
            });
  return out;
}

}  // namespace cubic27
