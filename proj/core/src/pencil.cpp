#include "cubic27/pencil.hpp"

#include <algorithm>
#include <sstream>

namespace cubic27 {

namespace {

// ---- small exact linear algebra helpers ----

Rational gauss_det(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  Rational det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

// Sylvester determinant of two coefficient vectors with *declared* degrees
// (no trimming); a[i] multiplies x^(n-i) y^i. Rows of a come first.
Rational syl_det_fixed(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  const int n = static_cast<int>(a.size()) - 1;
  const int m = static_cast<int>(b.size()) - 1;
  const size_t size = static_cast<size_t>(n + m);
  std::vector<std::vector<Rational>> mat(size, std::vector<Rational>(size, Rational(0)));
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) mat[static_cast<size_t>(r)][static_cast<size_t>(r + i)] = a[static_cast<size_t>(i)];
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) mat[static_cast<size_t>(m + r)][static_cast<size_t>(r + i)] = b[static_cast<size_t>(i)];
  return gauss_det(std::move(mat));
}

// ---- ternary form helpers (coefficients assumed integral rationals) ----

// coefficient of z^k, as the coefficient vector of a binary form of degree
// deg(P)-k in (x, y); entry i multiplies x^(g-i) y^i
std::vector<Rational> z_coeff_form(const HomogPoly& P, int k) {
  const int g = P.degree() - k;
  std::vector<Rational> out(static_cast<size_t>(g) + 1, Rational(0));
  for (int i = 0; i <= g; ++i) out[static_cast<size_t>(i)] = P.coeff({g - i, i, k});
  return out;
}

Rational eval_form(const std::vector<Rational>& form, const Rational& u) {
  // value at (x, y) = (1, u)
  Rational acc(0);
  for (size_t i = form.size(); i-- > 0;) acc = acc * u + form[i];
  return acc;
}

// Res_z of two ternary forms of declared z-degree e (leading z-coefficients
// are scalars after the regularity change), evaluated at (x, y) = (1, u).
Rational resz_at(const HomogPoly& P, const HomogPoly& Q, int e, const Rational& u) {
  std::vector<Rational> a(static_cast<size_t>(e) + 1), b(static_cast<size_t>(e) + 1);
  // a[i] = coefficient of z^(e-i), so a[0] is the leading z-coefficient
  for (int k = 0; k <= e; ++k) {
    a[static_cast<size_t>(e - k)] = eval_form(z_coeff_form(P, k), u);
    b[static_cast<size_t>(e - k)] = eval_form(z_coeff_form(Q, k), u);
  }
  return syl_det_fixed(a, b);
}

struct CoordChange {
  std::array<std::array<Int, 3>, 3> cols;     // substitution columns
  std::array<std::array<Int, 3>, 3> inv_cols; // inverse substitution
};

// Unimodular changes tried in order until the doubled partial derivative has
// a nonzero (scalar) leading z-coefficient.
std::vector<CoordChange> coordinate_changes() {
  auto col = [](long a, long b, long c) { return std::array<Int, 3>{Int(a), Int(b), Int(c)}; };
  std::vector<CoordChange> out;
  out.push_back({{col(1, 0, 0), col(0, 1, 0), col(0, 0, 1)},
                 {col(1, 0, 0), col(0, 1, 0), col(0, 0, 1)}});
  out.push_back({{col(0, 0, 1), col(0, 1, 0), col(1, 0, 0)},
                 {col(0, 0, 1), col(0, 1, 0), col(1, 0, 0)}});
  out.push_back({{col(1, 0, 0), col(0, 0, 1), col(0, 1, 0)},
                 {col(1, 0, 0), col(0, 0, 1), col(0, 1, 0)}});
  // z -> z, x -> x + z, y -> y: substitution x = u + w, y = v, z = w
  out.push_back({{col(1, 0, 0), col(0, 1, 0), col(1, 0, 1)},
                 {col(1, 0, 0), col(0, 1, 0), col(-1, 0, 1)}});
  out.push_back({{col(1, 0, 0), col(0, 1, 0), col(0, 1, 1)},
                 {col(1, 0, 0), col(0, 1, 0), col(0, -1, 1)}});
  out.push_back({{col(1, 0, 0), col(0, 1, 0), col(1, 1, 1)},
                 {col(1, 0, 0), col(0, 1, 0), col(-1, -1, 1)}});
  out.push_back({{col(1, 0, 1), col(0, 1, 0), col(0, 0, 1)},
                 {col(1, 0, -1), col(0, 1, 0), col(0, 0, 1)}});
  out.push_back({{col(1, 1, 1), col(1, 2, 1), col(1, 1, 2)},
                 {col(3, -1, -1), col(-1, 1, 0), col(-1, 0, 1)}});
  return out;
}

HomogPoly apply_change(const HomogPoly& F, const CoordChange& ch) {
  return F.substitute_linear(ch.cols[0], ch.cols[1], ch.cols[2]);
}

ProjPoint map_back(const CoordChange& ch, const ProjPoint& p) {
  std::array<Int, 3> v{Int(0), Int(0), Int(0)};
  for (size_t c = 0; c < 3; ++c)
    for (size_t r = 0; r < 3; ++r) v[r] += ch.cols[c][r] * p.coords()[c];
  return ProjPoint(v);
}

HomogPoly integral_scaled(const HomogPoly& F) {
  if (F.is_zero()) return F;
  Int l(1);
  for (const auto& [m, v] : F.coeffs()) l = lcm(l, v.get_den());
  return F * Rational(l);
}

// The coupled elimination forms A_0..A_e of three ternary forms of common
// degree e: Res_z(P_dbl, lambda*P_a + mu*P_b) = sum A_k lambda^(e-k) mu^k.
// Points (x0:y0) where every A_k vanishes are exactly the (x:y)-shadows of
// common zeros of the three forms, provided lc_z(P_dbl) is a nonzero scalar.
std::vector<BinaryForm> coupled_forms(const HomogPoly& Pdbl, const HomogPoly& Pa,
                                      const HomogPoly& Pb, int e) {
  const int out_deg = e * e;
  std::vector<std::pair<long, long>> lm_samples;
  for (long s = 0; static_cast<int>(lm_samples.size()) < e + 1; ++s) {
    if (s == 0) lm_samples.push_back({1, 0});
    else if (s == 1) lm_samples.push_back({0, 1});
    else lm_samples.push_back({1, s - 1});  // (1,1), (1,2), ...
  }
  // values B_s(u_j) with u_j = 0, 1, -1, 2, -2, ...
  std::vector<Rational> us;
  for (int j = 0; static_cast<int>(us.size()) < out_deg + 1; ++j) {
    long v = (j + 1) / 2;
    us.push_back(Rational(j % 2 == 1 ? v : -v));
  }
  std::vector<std::vector<Rational>> B;  // per sample: coefficient vector
  for (auto [lam, mu] : lm_samples) {
    HomogPoly Q = Pa * Rational(lam) + Pb * Rational(mu);
    std::vector<std::pair<Rational, Rational>> pts;
    for (const auto& u : us) pts.push_back({u, resz_at(Pdbl, Q, e, u)});
    QPoly interp = lagrange_interpolate(pts);
    std::vector<Rational> coeffs(static_cast<size_t>(out_deg) + 1, Rational(0));
    for (int i = 0; i <= interp.degree(); ++i) coeffs[static_cast<size_t>(i)] = interp[static_cast<size_t>(i)];
    B.push_back(std::move(coeffs));
  }
  // solve for A_k from the sampled values of the (lambda, mu)-form
  std::vector<std::vector<Rational>> V(static_cast<size_t>(e) + 1,
                                       std::vector<Rational>(static_cast<size_t>(e) + 1));
  for (int s = 0; s <= e; ++s)
    for (int k = 0; k <= e; ++k) {
      Rational lv = pow(Rational(lm_samples[static_cast<size_t>(s)].first),
                        static_cast<unsigned long>(e - k));
      Rational mv = pow(Rational(lm_samples[static_cast<size_t>(s)].second),
                        static_cast<unsigned long>(k));
      V[static_cast<size_t>(s)][static_cast<size_t>(k)] = lv * mv;
    }
  // invert the small Vandermonde-like system by Gaussian elimination, one
  // right-hand side per output coefficient
  std::vector<BinaryForm> out;
  std::vector<std::vector<Rational>> sol(static_cast<size_t>(e) + 1,
                                         std::vector<Rational>(static_cast<size_t>(out_deg) + 1, Rational(0)));
  // augmented elimination
  std::vector<std::vector<Rational>> M = V;
  std::vector<std::vector<Rational>> R(static_cast<size_t>(e) + 1,
                                       std::vector<Rational>(static_cast<size_t>(out_deg) + 1));
  for (int s = 0; s <= e; ++s)
    for (int c = 0; c <= out_deg; ++c) R[static_cast<size_t>(s)][static_cast<size_t>(c)] = B[static_cast<size_t>(s)][static_cast<size_t>(c)];
  const size_t n = static_cast<size_t>(e) + 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::InternalInconsistency, "singular sample matrix");
    std::swap(M[piv], M[col]);
    std::swap(R[piv], R[col]);
    for (size_t r2 = 0; r2 < n; ++r2) {
      if (r2 == col || M[r2][col] == 0) continue;
      Rational f = M[r2][col] / M[col][col];
      for (size_t c2 = col; c2 < n; ++c2) M[r2][c2] -= f * M[col][c2];
      for (size_t c2 = 0; c2 < R[0].size(); ++c2) R[r2][c2] -= f * R[col][c2];
    }
  }
  for (size_t k = 0; k < n; ++k)
    for (size_t c2 = 0; c2 < R[0].size(); ++c2) sol[k][c2] = R[k][c2] / M[k][k];
  for (size_t k = 0; k < n; ++k) out.emplace_back(out_deg, sol[k]);
  return out;
}

// gcd of binary forms over Q, returned as a binary form of exact degree
BinaryForm binary_gcd(const std::vector<const BinaryForm*>& forms) {
  // split off the common power of s (roots at (0:1)) and gcd of dehomogenized parts
  int common_spow = -1;
  std::vector<QPoly> dehoms;
  for (const BinaryForm* f : forms) {
    const auto& c = f->coeffs();
    int last = -1;
    for (int i = 0; i < static_cast<int>(c.size()); ++i)
      if (c[static_cast<size_t>(i)] != 0) last = i;
    int spow = f->degree() - last;  // multiplicity of root (0:1)
    common_spow = (common_spow < 0) ? spow : std::min(common_spow, spow);
    dehoms.emplace_back(std::vector<Rational>(c.begin(), c.end()));
  }
  QPoly g = dehoms[0];
  for (size_t i = 1; i < dehoms.size(); ++i) g = gcd(g, dehoms[i]);
  if (common_spow < 0) common_spow = 0;
  int deg = g.degree() + common_spow;
  std::vector<Rational> coeffs(static_cast<size_t>(deg) + 1, Rational(0));
  for (int i = 0; i <= g.degree(); ++i) coeffs[static_cast<size_t>(i)] = g[static_cast<size_t>(i)];
  return BinaryForm(deg, std::move(coeffs));
}

bool form_is_zero(const BinaryForm& f) { return f.is_zero(); }

}  // namespace

SingularLocus singular_points(const HomogPoly& F_in) {
  if (F_in.is_zero()) throw Error(ErrorCode::ZeroCurve, "singular locus of zero curve");
  SingularLocus out;
  if (F_in.degree() < 2) {
    out.all_fibers_rational = true;
    return out;  // a line is smooth
  }
  HomogPoly F = integral_scaled(F_in);
  const int e = F.degree() - 1;

  for (const auto& ch : coordinate_changes()) {
    HomogPoly G = apply_change(F, ch);
    std::array<HomogPoly, 3> P = {G.partial(0), G.partial(1), G.partial(2)};
    // gradient identically zero cannot happen for nonzero F in char 0
    int dbl = -1;
    for (int i = 0; i < 3; ++i)
      if (P[static_cast<size_t>(i)].coeff({0, 0, e}) != 0) {
        dbl = i;
        break;
      }
    if (dbl < 0) continue;
    int a = (dbl + 1) % 3, b = (dbl + 2) % 3;
    auto A = coupled_forms(P[static_cast<size_t>(dbl)], P[static_cast<size_t>(a)],
                           P[static_cast<size_t>(b)], e);
    std::vector<const BinaryForm*> nonzero;
    for (const auto& f : A)
      if (!form_is_zero(f)) nonzero.push_back(&f);
    if (nonzero.empty()) {
      out.positive_dimensional = true;
      return out;
    }
    BinaryForm g = binary_gcd(nonzero);
    auto roots = distinct_root_count(g);
    out.fiber_count_closure = roots.total_closure;
    out.all_fibers_rational =
        static_cast<int>(roots.rational.size()) == roots.total_closure;
    for (const auto& r : roots.rational) {
      // lift: common z above (x0, y0) = (r.s, r.t)
      QPoly zg;
      bool first = true;
      for (int i = 0; i < 3; ++i) {
        std::vector<Rational> zc(static_cast<size_t>(e) + 1);
        for (int k = 0; k <= e; ++k) {
          // coefficient of z^k evaluated at (x0, y0)
          Rational acc(0);
          auto form = z_coeff_form(P[static_cast<size_t>(i)], k);
          const int gdeg = static_cast<int>(form.size()) - 1;
          std::vector<Rational> sp(static_cast<size_t>(gdeg) + 1), tp(static_cast<size_t>(gdeg) + 1);
          sp[0] = 1;
          tp[0] = 1;
          for (int q = 1; q <= gdeg; ++q) {
            sp[static_cast<size_t>(q)] = sp[static_cast<size_t>(q - 1)] * Rational(r.s);
            tp[static_cast<size_t>(q)] = tp[static_cast<size_t>(q - 1)] * Rational(r.t);
          }
          for (int q = 0; q <= gdeg; ++q)
            acc += form[static_cast<size_t>(q)] * sp[static_cast<size_t>(gdeg - q)] * tp[static_cast<size_t>(q)];
          zc[static_cast<size_t>(k)] = acc;
        }
        QPoly zi(std::move(zc));
        if (first) {
          zg = zi;
          first = false;
        } else {
          zg = gcd(zg, zi);
        }
      }
      if (zg.is_zero()) {
        // the whole line above this fiber is singular
        out.positive_dimensional = true;
        return out;
      }
      if (zg.degree() < 1) {
        out.all_fibers_rational = false;  // common z exists only over an extension
        continue;
      }
      IPoly zg_int = to_integer_primitive(zg);
      auto zroots = rational_roots(zg_int);
      for (const auto& zr : zroots) {
        Int den = zr.value.get_den();
        ProjPoint p_new(r.s * den, r.t * den, Int(zr.value.get_num()));
        out.rational_points.push_back(map_back(ch, p_new));
      }
      if (distinct_root_count_closure(zg_int) > static_cast<int>(zroots.size()))
        out.all_fibers_rational = false;
      if (zroots.empty()) out.all_fibers_rational = false;
    }
    // the chart point (0:0:1) is outside every (x:y)-fiber
    bool sing_origin = true;
    for (int i = 0; i < 3; ++i)
      if (P[static_cast<size_t>(i)].eval(ProjPoint(0, 0, 1)) != 0) sing_origin = false;
    if (sing_origin) {
      out.fiber_count_closure += 1;
      out.rational_points.push_back(map_back(ch, ProjPoint(0, 0, 1)));
    }
    std::sort(out.rational_points.begin(), out.rational_points.end());
    out.rational_points.erase(std::unique(out.rational_points.begin(), out.rational_points.end()),
                              out.rational_points.end());
    return out;
  }
  throw Error(ErrorCode::InternalInconsistency, "no admissible coordinate change");
}

PencilDiscriminantReport singular_members_of_pencil(const HomogPoly& F0_in,
                                                    const HomogPoly& F1_in) {
  if (F0_in.is_zero() || F1_in.is_zero())
    throw Error(ErrorCode::InvalidInput, "pencil requires nonzero generators");
  if (F0_in.degree() != 3 || F1_in.degree() != 3)
    throw Error(ErrorCode::InvalidInput, "pencil machinery covers cubic curves");
  // linear independence
  {
    const HomogPoly& A = F0_in;
    const HomogPoly& B = F1_in;
    bool dependent = true;
    std::optional<Rational> ratio;
    for (const auto& [m, v] : A.coeffs()) {
      Rational w = B.coeff(m);
      if (w == 0) {
        dependent = false;
        break;
      }
      Rational r = v / w;
      if (!ratio) ratio = r;
      else if (*ratio != r) {
        dependent = false;
        break;
      }
    }
    if (dependent && A.coeffs().size() == B.coeffs().size())
      throw Error(ErrorCode::InvalidInput, "pencil generators are proportional");
  }

  PencilDiscriminantReport rep;
  HomogPoly F0 = integral_scaled(F0_in);
  HomogPoly F1 = integral_scaled(F1_in);
  // keep the pencil parameter of the caller: scale jointly
  {
    Int l0(1), l1(1);
    for (const auto& [m, v] : F0_in.coeffs()) l0 = lcm(l0, v.get_den());
    for (const auto& [m, v] : F1_in.coeffs()) l1 = lcm(l1, v.get_den());
    Int l = lcm(l0, l1);
    F0 = F0_in * Rational(l);
    F1 = F1_in * Rational(l);
  }
  const int e = 2;  // partials of a cubic

  // choose a coordinate change and a doubled partial with nonzero scalar
  // leading z-coefficient as a polynomial in t
  const auto changes = coordinate_changes();
  const CoordChange* chosen = nullptr;
  int dbl = -1;
  HomogPoly G0, G1;
  for (const auto& ch : changes) {
    HomogPoly g0 = apply_change(F0, ch);
    HomogPoly g1 = apply_change(F1, ch);
    for (int i = 0; i < 3 && dbl < 0; ++i) {
      Rational c0 = g0.partial(i).coeff({0, 0, e});
      Rational c1 = g1.partial(i).coeff({0, 0, e});
      if (c0 != 0 || c1 != 0) dbl = i;
    }
    if (dbl >= 0) {
      chosen = &ch;
      G0 = g0;
      G1 = g1;
      break;
    }
  }
  if (!chosen) {
    rep.degenerate = true;
    rep.notes.push_back("no coordinate change exposes a z-regular partial");
    return rep;
  }
  const int a_idx = (dbl + 1) % 3, b_idx = (dbl + 2) % 3;

  // the member at t must keep the doubled partial z-regular; its leading
  // z-coefficient is linear in t with at most one rational root
  Rational lc0 = G0.partial(dbl).coeff({0, 0, e});
  Rational lc1 = G1.partial(dbl).coeff({0, 0, e});
  std::optional<Rational> lc_root;
  if (lc1 != 0) lc_root = -lc0 / lc1;

  // five fixed (alpha, beta)-samples pinning the degree-4 coupling form
  const std::array<std::pair<long, long>, 5> ab = {
      {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}}};

  // sample the five eliminant values over t and interpolate
  const int tdeg_bound = 32;
  const int nsamples = tdeg_bound + 3;
  std::array<std::vector<std::pair<Rational, Rational>>, 5> evals;
  std::vector<std::vector<std::pair<Rational, Rational>>> a0_coeff_samples;
  long tv = 0;
  int taken = 0;
  while (taken < nsamples) {
    Rational t = Rational(tv);
    tv = (tv >= 0) ? -(tv + 1) : -tv;  // 0, -1, 1, -2, 2, ...
    HomogPoly M = G0 + G1 * t;
    std::array<HomogPoly, 3> P = {M.partial(0), M.partial(1), M.partial(2)};
    auto A = coupled_forms(P[static_cast<size_t>(dbl)], P[static_cast<size_t>(a_idx)],
                           P[static_cast<size_t>(b_idx)], e);
    // A has entries A[0], A[1], A[2]; the eliminant couples A[0] against the
    // pencil spanned by A[1] and A[2]
    if (a0_coeff_samples.empty())
      a0_coeff_samples.resize(A[0].coeffs().size());
    for (size_t c = 0; c < A[0].coeffs().size(); ++c)
      a0_coeff_samples[c].push_back({t, A[0].coeffs()[c]});
    for (size_t s = 0; s < ab.size(); ++s) {
      std::vector<Rational> comb(A[1].coeffs().size());
      for (size_t c = 0; c < comb.size(); ++c)
        comb[c] = Rational(ab[s].first) * A[1].coeffs()[c] + Rational(ab[s].second) * A[2].coeffs()[c];
      Rational v = syl_det_fixed(A[0].coeffs(), comb);
      evals[s].push_back({t, v});
    }
    ++taken;
  }

  std::vector<IPoly> elims;
  for (size_t s = 0; s < ab.size(); ++s) {
    QPoly p = lagrange_interpolate(evals[s]);
    if (!p.is_zero()) elims.push_back(to_integer_primitive(p));
  }
  if (elims.empty()) {
    rep.degenerate = true;
    rep.notes.push_back("all coupled eliminants vanish identically");
    return rep;
  }
  IPoly D = elims[0];
  for (size_t i = 1; i < elims.size(); ++i) D = gcd_z(D, elims[i]);

  // content corner: parameters where the carrier form A_0 vanishes identically
  IPoly content_t;
  {
    bool first = true;
    for (auto& samples : a0_coeff_samples) {
      QPoly p = lagrange_interpolate(samples);
      if (p.is_zero()) continue;
      IPoly ip = to_integer_primitive(p);
      content_t = first ? ip : gcd_z(content_t, ip);
      first = false;
    }
    if (first) {
      rep.degenerate = true;
      rep.notes.push_back("carrier form vanishes for every parameter");
      return rep;
    }
  }

  if (D.is_zero() || D.degree() < 0) {
    rep.degenerate = true;
    return rep;
  }
  if (D.degree() == 0) {
    rep.eliminant = D;
    rep.squarefree_degree = 0;
  } else {
    rep.eliminant = primitive_part(D);
  }

  IPoly S = squarefree_part(rep.eliminant.is_zero() ? D : rep.eliminant);
  // corner verification: rational roots of the content and of the leading
  // z-coefficient get individually re-checked; spurious ones are divided out
  std::vector<Rational> suspicious;
  if (content_t.degree() > 0) {
    rep.notes.push_back("carrier content nonconstant; rational content roots re-verified");
    for (const auto& r : rational_roots(content_t)) suspicious.push_back(r.value);
  }
  if (lc_root) suspicious.push_back(*lc_root);

  auto member_at = [&](const Rational& t) { return F0_in + F1_in * t; };

  for (const auto& t : suspicious) {
    if (S.is_zero() || S.degree() < 1) break;
    // is t a root of S?
    Rational val = to_rational(S).eval(t);
    if (val != 0) continue;
    SingularLocus loc = singular_points(member_at(t));
    bool really = loc.positive_dimensional || loc.fiber_count_closure > 0;
    if (!really) {
      // divide the spurious linear factor out
      IPoly lin(std::vector<Int>{Int(-t.get_num()), Int(t.get_den())});
      S = primitive_part(exact_div(S, lin));
      rep.discarded_candidates.push_back(t);
    }
  }
  rep.squarefree_degree = std::max(S.degree(), 0);

  // chart origin pass: members singular at the image of (0:0:1)
  {
    std::array<QPoly, 3> lins;
    for (int i = 0; i < 3; ++i) {
      Rational c0 = G0.partial(i).eval(ProjPoint(0, 0, 1));
      Rational c1 = G1.partial(i).eval(ProjPoint(0, 0, 1));
      lins[static_cast<size_t>(i)] = QPoly(std::vector<Rational>{c0, c1});
    }
    bool all_zero = lins[0].is_zero() && lins[1].is_zero() && lins[2].is_zero();
    if (all_zero) {
      rep.notes.push_back("every member is singular at a base point");
      rep.degenerate = true;
    } else {
      std::optional<Rational> tcommon;
      bool consistent = true;
      for (const auto& l : lins) {
        if (l.is_zero()) continue;
        if (l.degree() == 0) {
          consistent = false;
          break;
        }
        Rational root = -l[0] / l[1];
        if (!tcommon) tcommon = root;
        else if (*tcommon != root) consistent = false;
      }
      if (consistent && tcommon) {
        Rational tr = *tcommon;
        if (to_rational(S).eval(tr) != 0) {
          rep.squarefree_degree += 1;
          rep.notes.push_back("additional singular member found at the chart origin");
          PencilMember m;
          m.t = tr;
          m.verified_singular = true;
          auto loc = singular_points(member_at(tr));
          m.singular_points = loc.rational_points;
          for (const auto& p : m.singular_points) m.is_node.push_back(is_node(member_at(tr), p));
          m.has_rational_singular_point = !m.singular_points.empty();
          rep.rational_members.push_back(m);
        }
      }
    }
  }

  // rational members from the eliminant
  if (!S.is_zero() && S.degree() >= 1) {
    for (const auto& r : rational_roots(S)) {
      PencilMember m;
      m.t = r.value;
      HomogPoly member = member_at(r.value);
      SingularLocus loc = singular_points(member);
      m.verified_singular = loc.positive_dimensional || loc.fiber_count_closure > 0;
      if (!m.verified_singular) {
        rep.discarded_candidates.push_back(r.value);
        rep.squarefree_degree -= 1;
        continue;
      }
      m.singular_points = loc.rational_points;
      for (const auto& p : m.singular_points) m.is_node.push_back(is_node(member, p));
      m.has_rational_singular_point = !m.singular_points.empty();
      rep.rational_members.push_back(m);
    }
  }
  std::sort(rep.rational_members.begin(), rep.rational_members.end(),
            [](const PencilMember& x, const PencilMember& y) { return x.t < y.t; });

  // the member at infinity is F1 itself
  {
    SingularLocus loc = singular_points(F1_in);
    rep.infinity_member_singular = loc.positive_dimensional || loc.fiber_count_closure > 0;
    if (rep.infinity_member_singular)
      rep.notes.push_back("member at infinity is singular (not part of the affine count)");
  }
  return rep;
}

}  // namespace cubic27
