#pragma once

#include <algorithm>
#include <vector>

#include "cubic27/numbers.hpp"

namespace cubic27 {

/// Dense univariate polynomial over an exact ring/field T. Coefficient i is
/// the coefficient of x^i; the representation is always trimmed.
template <class T>
class Poly {
 public:
  Poly() = default;
  Poly(long v) {  // NOLINT: scalar embedding, lets Poly nest as a coefficient ring
    if (v != 0) c_.push_back(T(v));
  }
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
  static Poly x() { return Poly(std::vector<T>{T(0), T(1)}); }
  static Poly monomial(size_t k, T v) {
    std::vector<T> c(k + 1, T(0));
    c[k] = std::move(v);
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  const T& operator[](size_t i) const { return c_[i]; }
  const T& lc() const { return c_.back(); }

  T eval(const T& x) const {
    if (c_.empty()) return T(0);
    T acc = c_.back();
    for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
    return Poly(std::move(d));
  }

  Poly operator-() const {
    std::vector<T> d = c_;
    for (auto& v : d) v = -v;
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> d(std::max(a.c_.size(), b.c_.size()), T(0));
    for (size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) d[i] += b.c_[i];
    return Poly(std::move(d));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> d(a.c_.size() + b.c_.size() - 1, T(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(d));
  }
  friend Poly operator*(const Poly& a, const T& s) {
    std::vector<T> d = a.c_;
    for (auto& v : d) v = v * s;
    return Poly(std::move(d));
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

  /// x -> a*x + b
  Poly compose_linear(const T& a, const T& b) const {
    Poly acc;
    Poly lin(std::vector<T>{b, a});
    for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + constant(c_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
  }
  static bool is_zero_value(const T& v) { return v == T(0); }
  std::vector<T> c_;
};

template <class T>
bool is_zero(const Poly<T>& p) { return p.is_zero(); }
inline bool is_zero(const Int& v) { return v == 0; }
inline bool is_zero(const Rational& v) { return v == 0; }

/// Exact quotient in R[x] for an integral domain R where divisibility is
/// guaranteed by the caller. Each leading-coefficient division must come out
/// exact or the whole division was not exact.
template <class T>
Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw Error(ErrorCode::InternalInconsistency, "poly exact_div by zero");
  if (a.is_zero()) return Poly<T>();
  int da = a.degree(), db = b.degree();
  if (da < db) throw Error(ErrorCode::InternalInconsistency, "poly exact_div not exact");
  std::vector<T> rem = a.coeffs();
  std::vector<T> q(static_cast<size_t>(da - db + 1), T(0));
  for (int k = da - db; k >= 0; --k) {
    const T& top = rem[static_cast<size_t>(k + db)];
    if (is_zero(top)) continue;
    T qk = exact_div(top, b.lc());
    q[static_cast<size_t>(k)] = qk;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<size_t>(k + i)] = rem[static_cast<size_t>(k + i)] - qk * b[static_cast<size_t>(i)];
  }
  for (const auto& r : rem)
    if (!is_zero(r)) throw Error(ErrorCode::InternalInconsistency, "poly exact_div not exact");
  return Poly<T>(std::move(q));
}

inline Rational exact_div(const Rational& a, const Rational& b) {
  if (b == 0) throw Error(ErrorCode::InternalInconsistency, "division by zero");
  return a / b;
}

/// Quotient/remainder over a field.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw Error(ErrorCode::InternalInconsistency, "poly divmod by zero");
  std::vector<T> rem = a.coeffs();
  int da = a.degree(), db = b.degree();
  if (da < db) return {Poly<T>(), a};
  std::vector<T> q(static_cast<size_t>(da - db + 1), T(0));
  for (int k = da - db; k >= 0; --k) {
    const T& top = rem[static_cast<size_t>(k + db)];
    if (is_zero(top)) continue;
    T qk = top / b.lc();
    q[static_cast<size_t>(k)] = qk;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<size_t>(k + i)] = rem[static_cast<size_t>(k + i)] - qk * b[static_cast<size_t>(i)];
  }
  return {Poly<T>(std::move(q)), Poly<T>(std::move(rem))};
}

/// Monic gcd over a field.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    (void)q;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  T inv = T(1) / a.lc();
  return a * inv;
}

using IPoly = Poly<Int>;
using QPoly = Poly<Rational>;

Int content(const IPoly& p);
IPoly primitive_part(const IPoly& p);
IPoly to_integer_primitive(const QPoly& p);
QPoly to_rational(const IPoly& p);

/// gcd in Z[x] via the rational gcd, returned primitive with positive lc.
IPoly gcd_z(const IPoly& a, const IPoly& b);

/// p / gcd(p, p'), primitive with positive leading coefficient.
IPoly squarefree_part(const IPoly& p);

/// Determinant of the Sylvester matrix with the rows of f first.
/// Res(f, g) = lc(g)^deg f * prod f(beta_j) over roots of g, under the stated
/// row convention; zero iff f and g share a root over the closure.
Rational sylvester_resultant(const QPoly& f, const QPoly& g);

/// Fraction-free Sylvester determinant over an integral domain (used with
/// T = IPoly for elimination in Z[t]).
template <class T>
T sylvester_resultant_ring(const Poly<T>& f, const Poly<T>& g);

/// Bareiss determinant over an integral domain.
template <class T>
T bareiss_determinant(std::vector<std::vector<T>> m) {
  const size_t n = m.size();
  if (n == 0) return T(1);
  T denom(1);
  int sgn_acc = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = k;
    while (piv < n && is_zero(m[piv][k])) ++piv;
    if (piv == n) return T(0);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sgn_acc = -sgn_acc;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        T num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = (k == 0) ? num : exact_div(num, denom);
      }
      m[i][k] = T(0);
    }
    denom = m[k][k];
  }
  T det = m[n - 1][n - 1];
  return sgn_acc > 0 ? det : -det;
}

template <class T>
T sylvester_resultant_ring(const Poly<T>& f, const Poly<T>& g) {
  if (f.is_zero() || g.is_zero())
    throw Error(ErrorCode::ZeroForm, "resultant of zero polynomial");
  int n = f.degree(), m = g.degree();
  if (n == 0 && m == 0) return T(1);
  if (n == 0) {
    T acc(1);
    for (int i = 0; i < m; ++i) acc = acc * f.lc();
    return acc;
  }
  if (m == 0) {
    T acc(1);
    for (int i = 0; i < n; ++i) acc = acc * g.lc();
    return acc;
  }
  size_t size = static_cast<size_t>(n + m);
  std::vector<std::vector<T>> mat(size, std::vector<T>(size, T(0)));
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i)
      mat[static_cast<size_t>(r)][static_cast<size_t>(r + i)] = f[static_cast<size_t>(n - i)];
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i)
      mat[static_cast<size_t>(m + r)][static_cast<size_t>(r + i)] = g[static_cast<size_t>(m - i)];
  return bareiss_determinant(std::move(mat));
}

}  // namespace cubic27
