#include "cubic27/roots.hpp"

#include <algorithm>

namespace cubic27 {

Int content(const IPoly& p) {
  Int g(0);
  for (const auto& c : p.coeffs()) g = gcd(g, c);
  return g;
}

IPoly primitive_part(const IPoly& p) {
  if (p.is_zero()) return p;
  Int g = content(p);
  if (sign(p.lc()) < 0) g = -g;
  std::vector<Int> c = p.coeffs();
  for (auto& v : c) v = exact_div(v, g);
  return IPoly(std::move(c));
}

IPoly to_integer_primitive(const QPoly& p) {
  if (p.is_zero()) return IPoly();
  Int l(1);
  for (const auto& c : p.coeffs()) l = lcm(l, c.get_den());
  std::vector<Int> c(p.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i) {
    const Rational& q = p[i];
    c[i] = q.get_num() * exact_div(l, q.get_den());
  }
  return primitive_part(IPoly(std::move(c)));
}

QPoly to_rational(const IPoly& p) {
  std::vector<Rational> c(p.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = Rational(p[i]);
  return QPoly(std::move(c));
}

IPoly gcd_z(const IPoly& a, const IPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  QPoly g = gcd(to_rational(a), to_rational(b));
  return to_integer_primitive(g);
}

IPoly squarefree_part(const IPoly& p) {
  if (p.is_zero()) return p;
  IPoly pp = primitive_part(p);
  if (pp.degree() == 0) return IPoly(std::vector<Int>{Int(1)});
  IPoly g = gcd_z(pp, pp.derivative());
  if (g.degree() == 0) return pp;
  return primitive_part(exact_div(pp, g));
}

namespace {

// Pseudo-remainder of a by b scaled so the multiplier is positive:
// |lc(b)|^(deg a - deg b + 1) * a  mod  b. A positive multiplier keeps sign
// sequences usable for Sturm chains.
IPoly positive_prem(const IPoly& a, const IPoly& b) {
  int delta = a.degree() - b.degree();
  if (delta < 0) return a;
  Int mult = pow(Int(abs(b.lc())), static_cast<unsigned long>(delta) + 1);
  std::vector<Int> rem = (a * mult).coeffs();
  IPoly r(std::move(rem));
  // plain long division; every leading division is exact by construction
  std::vector<Int> rc = r.coeffs();
  int db = b.degree();
  for (int k = r.degree() - db; k >= 0; --k) {
    const Int top = rc[static_cast<size_t>(k + db)];
    if (top == 0) continue;
    Int qk = exact_div(top, b.lc());
    for (int i = 0; i <= db; ++i)
      rc[static_cast<size_t>(k + i)] -= qk * b[static_cast<size_t>(i)];
  }
  return IPoly(std::move(rc));
}

int sign_variations(const std::vector<int>& signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int variations_at(const std::vector<IPoly>& chain, const Int& x) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& p : chain) s.push_back(sign(p.eval(x)));
  return sign_variations(s);
}

}  // namespace

namespace {
// divide by the positive content only; signs must survive for Sturm counting
IPoly positive_primitive(const IPoly& p) {
  if (p.is_zero()) return p;
  Int g = content(p);
  std::vector<Int> c = p.coeffs();
  for (auto& v : c) v = exact_div(v, g);
  return IPoly(std::move(c));
}
}  // namespace

std::vector<IPoly> sturm_chain(const IPoly& squarefree) {
  std::vector<IPoly> chain;
  chain.push_back(positive_primitive(squarefree));
  IPoly d = positive_primitive(squarefree.derivative());
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    const IPoly& a = chain[chain.size() - 2];
    const IPoly& b = chain[chain.size() - 1];
    IPoly r = positive_prem(a, b);
    if (r.is_zero()) break;
    r = positive_primitive(r);
    chain.push_back(-r);
    if (chain.back().degree() == 0) break;
  }
  return chain;
}

int sturm_count_open(const std::vector<IPoly>& chain, const Int& a, const Int& b) {
  return variations_at(chain, a) - variations_at(chain, b);
}

int distinct_root_count_closure(const IPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroForm, "zero polynomial");
  return squarefree_part(p).degree();
}

namespace {

// Integer roots of a squarefree integer polynomial, via Sturm bisection over
// integer intervals. Complete without factoring any coefficient.
// Invariant: g(lo) != 0 and g(hi) != 0; reports roots in the open interval.
void collect_integer_roots(const std::vector<IPoly>& chain, const IPoly& g,
                           const Int& lo, const Int& hi, std::vector<Int>& out) {
  if (hi - lo <= 1) return;  // no integer strictly inside
  if (sturm_count_open(chain, lo, hi) == 0) return;
  Int mid = (lo + hi) / 2;  // hi - lo >= 2 keeps mid strictly inside
  if (g.eval(mid) == 0) {
    out.push_back(mid);
    Int a = mid - 1;
    while (a > lo && g.eval(a) == 0) {
      out.push_back(a);
      --a;
    }
    Int b = mid + 1;
    while (b < hi && g.eval(b) == 0) {
      out.push_back(b);
      ++b;
    }
    collect_integer_roots(chain, g, lo, a, out);
    collect_integer_roots(chain, g, b, hi, out);
    return;
  }
  collect_integer_roots(chain, g, lo, mid, out);
  collect_integer_roots(chain, g, mid, hi, out);
}

}  // namespace

std::vector<RationalRoot> rational_roots(const IPoly& p_in) {
  if (p_in.is_zero()) throw Error(ErrorCode::ZeroForm, "rational_roots of zero polynomial");
  std::vector<RationalRoot> out;
  IPoly p = primitive_part(p_in);
  // root at 0
  size_t k = 0;
  while (k < p.coeffs().size() && p[k] == 0) ++k;
  if (k > 0) {
    out.push_back({Rational(0), static_cast<int>(k)});
    std::vector<Int> c(p.coeffs().begin() + static_cast<long>(k), p.coeffs().end());
    p = IPoly(std::move(c));
  }
  if (p.degree() <= 0) return out;

  IPoly s = squarefree_part(p);
  // Monicize: roots of s are y/lc where y runs over integer roots of
  // g(y) = lc^(n-1) s(y/lc). Integer roots obey |y| <= |lc| + max|coeff(s)|.
  const Int L = s.lc();
  const int n = s.degree();
  std::vector<Int> gc(static_cast<size_t>(n) + 1);
  // g_i = s_i * L^(n-1-i) for i < n; the top coefficient s_n / L equals 1
  for (int i = 0; i < n; ++i)
    gc[static_cast<size_t>(i)] = s[static_cast<size_t>(i)] * pow(L, static_cast<unsigned long>(n - 1 - i));
  gc[static_cast<size_t>(n)] = 1;
  IPoly g = primitive_part(IPoly(std::move(gc)));

  // Cauchy bound: roots x of s obey |x| <= 1 + max|s_i| / |lc|, so the
  // integer roots y = lc * x of g obey |y| <= |lc| + max|s_i|.
  Int maxc(0);
  for (const auto& c : s.coeffs()) maxc = std::max(maxc, Int(abs(c)));
  Int bound = Int(abs(L)) + maxc + 1;

  auto chain = sturm_chain(g);
  std::vector<Int> iroots;
  Int lo = -bound, hi = bound;
  while (g.eval(lo) == 0) --lo;  // move endpoints off roots
  while (g.eval(hi) == 0) ++hi;
  collect_integer_roots(chain, g, lo, hi, iroots);

  std::sort(iroots.begin(), iroots.end());
  for (const auto& y : iroots) {
    Rational r = make_rational(y, L);
    // multiplicity by repeated exact division of the deflated p
    IPoly lin(std::vector<Int>{Int(-r.get_num()), Int(r.get_den())});  // den*x - num
    int mult = 0;
    IPoly q = p;
    while (true) {
      auto qr = divmod(to_rational(q), to_rational(lin));
      if (!qr.second.is_zero()) break;
      q = to_integer_primitive(qr.first);
      ++mult;
      if (q.degree() < 1) break;
    }
    if (mult > 0) out.push_back({r, mult});
  }
  std::sort(out.begin(), out.end(),
            [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  return out;
}

std::vector<RationalRoot> rational_roots(const QPoly& p) {
  return rational_roots(to_integer_primitive(p));
}

QPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& samples) {
  QPoly acc;
  for (size_t j = 0; j < samples.size(); ++j) {
    if (samples[j].second == 0) continue;
    QPoly lj = QPoly::constant(Rational(1));
    Rational denom(1);
    for (size_t k = 0; k < samples.size(); ++k) {
      if (k == j) continue;
      lj = lj * QPoly(std::vector<Rational>{-samples[k].first, Rational(1)});
      denom *= samples[j].first - samples[k].first;
    }
    acc = acc + lj * (samples[j].second / denom);
  }
  return acc;
}

Rational sylvester_resultant(const QPoly& f, const QPoly& g) {
  if (f.is_zero() || g.is_zero())
    throw Error(ErrorCode::ZeroForm, "resultant of zero polynomial");
  int n = f.degree(), m = g.degree();
  if (n == 0 && m == 0) return Rational(1);
  if (n == 0) return pow(Rational(f.lc()), static_cast<unsigned long>(m));
  if (m == 0) return pow(Rational(g.lc()), static_cast<unsigned long>(n));
  size_t size = static_cast<size_t>(n + m);
  std::vector<std::vector<Rational>> mat(size, std::vector<Rational>(size, Rational(0)));
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i)
      mat[static_cast<size_t>(r)][static_cast<size_t>(r + i)] = f[static_cast<size_t>(n - i)];
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i)
      mat[static_cast<size_t>(m + r)][static_cast<size_t>(r + i)] = g[static_cast<size_t>(m - i)];
  // Gaussian elimination over Q with pivot tracking
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
      Rational fct = mat[r][col] / mat[col][col];
      for (size_t cc = col; cc < size; ++cc) mat[r][cc] -= fct * mat[col][cc];
    }
  }
  return det;
}

}  // namespace cubic27
