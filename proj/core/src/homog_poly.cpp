#include "cubic27/homog_poly.hpp"

#include <sstream>

namespace cubic27 {

HomogPoly::HomogPoly(int degree, std::map<Monomial, Rational> coeffs)
    : degree_(degree), c_(std::move(coeffs)) {
  for (auto it = c_.begin(); it != c_.end();) {
    const auto& [m, v] = *it;
    if (m[0] + m[1] + m[2] != degree_)
      throw Error(ErrorCode::InvalidInput, "monomial degree mismatch");
    if (m[0] < 0 || m[1] < 0 || m[2] < 0)
      throw Error(ErrorCode::InvalidInput, "negative exponent");
    it = (v == 0) ? c_.erase(it) : std::next(it);
  }
}

HomogPoly HomogPoly::linear(const ProjLine& l) {
  std::map<Monomial, Rational> c;
  if (l[0] != 0) c[{1, 0, 0}] = Rational(l[0]);
  if (l[1] != 0) c[{0, 1, 0}] = Rational(l[1]);
  if (l[2] != 0) c[{0, 0, 1}] = Rational(l[2]);
  return HomogPoly(1, std::move(c));
}

HomogPoly HomogPoly::from_terms(int degree,
                                const std::vector<std::pair<Monomial, Rational>>& terms) {
  std::map<Monomial, Rational> c;
  for (const auto& [m, v] : terms) c[m] += v;
  return HomogPoly(degree, std::move(c));
}

Rational HomogPoly::coeff(const Monomial& m) const {
  auto it = c_.find(m);
  return it == c_.end() ? Rational(0) : it->second;
}

void HomogPoly::insert(const Monomial& m, const Rational& v) {
  auto it = c_.find(m);
  if (it == c_.end()) {
    if (v != 0) c_.emplace(m, v);
    return;
  }
  it->second += v;
  if (it->second == 0) c_.erase(it);
}

Rational HomogPoly::eval(const std::array<Rational, 3>& p) const {
  Rational acc(0);
  for (const auto& [m, v] : c_) {
    Rational term = v;
    for (int i = 0; i < 3; ++i)
      for (int e = 0; e < m[static_cast<size_t>(i)]; ++e) term *= p[static_cast<size_t>(i)];
    acc += term;
  }
  return acc;
}

Rational HomogPoly::eval(const ProjPoint& p) const {
  return eval({Rational(p[0]), Rational(p[1]), Rational(p[2])});
}

HomogPoly HomogPoly::partial(int var) const {
  HomogPoly out(degree_ > 0 ? degree_ - 1 : 0);
  for (const auto& [m, v] : c_) {
    int e = m[static_cast<size_t>(var)];
    if (e == 0) continue;
    Monomial n = m;
    n[static_cast<size_t>(var)] = e - 1;
    out.insert(n, v * Rational(e));
  }
  return out;
}

HomogPoly HomogPoly::operator*(const HomogPoly& o) const {
  HomogPoly out(degree_ + o.degree_);
  for (const auto& [m1, v1] : c_)
    for (const auto& [m2, v2] : o.c_)
      out.insert({m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]}, v1 * v2);
  return out;
}

HomogPoly HomogPoly::operator+(const HomogPoly& o) const {
  if (!is_zero() && !o.is_zero() && degree_ != o.degree_)
    throw Error(ErrorCode::InvalidInput, "degree mismatch in sum");
  HomogPoly out(is_zero() ? o.degree_ : degree_);
  out.c_ = c_;
  for (const auto& [m, v] : o.c_) out.insert(m, v);
  return out;
}

HomogPoly HomogPoly::operator-() const {
  HomogPoly out(degree_);
  for (const auto& [m, v] : c_) out.c_.emplace(m, -v);
  return out;
}

HomogPoly HomogPoly::operator*(const Rational& s) const {
  HomogPoly out(degree_);
  if (s == 0) return out;
  for (const auto& [m, v] : c_) out.c_.emplace(m, v * s);
  return out;
}

HomogPoly HomogPoly::substitute_linear(const std::array<Int, 3>& a, const std::array<Int, 3>& b,
                                       const std::array<Int, 3>& c) const {
  // linear forms for the images of x, y, z in the new variables (u, v, w)
  std::array<HomogPoly, 3> img;
  for (int coord = 0; coord < 3; ++coord) {
    std::map<Monomial, Rational> t;
    if (a[static_cast<size_t>(coord)] != 0) t[{1, 0, 0}] = Rational(a[static_cast<size_t>(coord)]);
    if (b[static_cast<size_t>(coord)] != 0) t[{0, 1, 0}] = Rational(b[static_cast<size_t>(coord)]);
    if (c[static_cast<size_t>(coord)] != 0) t[{0, 0, 1}] = Rational(c[static_cast<size_t>(coord)]);
    img[static_cast<size_t>(coord)] = HomogPoly(1, std::move(t));
  }
  HomogPoly acc(degree_);
  for (const auto& [m, v] : c_) {
    HomogPoly term(0, {{{0, 0, 0}, v}});
    for (int coord = 0; coord < 3; ++coord)
      for (int e = 0; e < m[static_cast<size_t>(coord)]; ++e)
        term = term * img[static_cast<size_t>(coord)];
    acc = acc + term;
  }
  return acc;
}

HomogPoly HomogPoly::normalized() const {
  if (is_zero()) return *this;
  Int l(1);
  for (const auto& [m, v] : c_) l = lcm(l, v.get_den());
  Int g(0);
  for (const auto& [m, v] : c_) g = gcd(g, Int(v.get_num() * exact_div(l, v.get_den())));
  Rational scale = make_rational(l, g);
  if (c_.begin()->second * scale < 0) scale = -scale;
  return *this * scale;
}

std::string HomogPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, v] : c_) {
    if (!first) os << " + ";
    first = false;
    os << v.get_str();
    const char* names[3] = {"x", "y", "z"};
    for (int i = 0; i < 3; ++i) {
      if (m[static_cast<size_t>(i)] > 0) {
        os << "*" << names[i];
        if (m[static_cast<size_t>(i)] > 1) os << "^" << m[static_cast<size_t>(i)];
      }
    }
  }
  return os.str();
}

namespace {
// Chart at p: k is the largest index with p[k] != 0; the two remaining
// coordinates, in increasing order, are the local axes.
std::pair<int, std::array<int, 2>> chart_at(const ProjPoint& p) {
  int k = -1;
  for (int i = 2; i >= 0; --i)
    if (p[i] != 0) {
      k = i;
      break;
    }
  std::array<int, 2> axes{};
  int n = 0;
  for (int i = 0; i < 3; ++i)
    if (i != k) axes[static_cast<size_t>(n++)] = i;
  return {k, axes};
}

std::array<Int, 3> axis_vector(int i) {
  std::array<Int, 3> v{Int(0), Int(0), Int(0)};
  v[static_cast<size_t>(i)] = 1;
  return v;
}
}  // namespace

TangentCone tangent_cone(const HomogPoly& F, const ProjPoint& p) {
  if (F.is_zero()) throw Error(ErrorCode::ZeroCurve, "tangent cone of zero curve");
  auto [k, axes] = chart_at(p);
  // G(u, v, w) = F(u*e_i + v*e_j + w*p); p maps to (0:0:1)
  HomogPoly G = F.substitute_linear(axis_vector(axes[0]), axis_vector(axes[1]), p.coords());
  const int d = F.degree();
  for (int m = 0; m <= d; ++m) {
    std::vector<Rational> cone(static_cast<size_t>(m) + 1, Rational(0));
    bool nonzero = false;
    for (int i = 0; i <= m; ++i) {
      Rational cval = G.coeff({m - i, i, d - m});
      cone[static_cast<size_t>(i)] = cval;
      if (cval != 0) nonzero = true;
    }
    if (nonzero) {
      TangentCone tc;
      tc.multiplicity = m;
      tc.cone = BinaryForm(m, std::move(cone));
      tc.chart = k;
      tc.axes = axes;
      return tc;
    }
  }
  throw Error(ErrorCode::InternalInconsistency, "no nonvanishing local form");
}

int multiplicity_at(const HomogPoly& F, const ProjPoint& p) {
  if (F.is_zero()) throw Error(ErrorCode::ZeroCurve, "multiplicity on zero curve");
  return tangent_cone(F, p).multiplicity;
}

bool is_node(const HomogPoly& F, const ProjPoint& p) {
  if (F.is_zero()) throw Error(ErrorCode::ZeroCurve, "node test on zero curve");
  TangentCone tc = tangent_cone(F, p);
  if (tc.multiplicity != 2) return false;
  return tc.cone.quadratic_discriminant() != 0;
}

std::pair<Int, Int> direction_in_chart(const TangentCone& frame, const ProjPoint& p,
                                       const ProjLine& l) {
  if (!incident(p, l))
    throw Error(ErrorCode::InvalidInput, "line does not pass through the point");
  // The direction of l at p is l's intersection with the coordinate plane
  // x_chart = 0, which has local coordinates (u, v) = the two axis entries.
  ProjLine chart_plane(axis_vector(frame.chart));
  if (l == chart_plane)
    throw Error(ErrorCode::InternalInconsistency, "line equals the chart plane");
  ProjPoint q0 = meet_lines(l, chart_plane);
  Int u0 = q0[frame.axes[0]];
  Int v0 = q0[frame.axes[1]];
  // q0 is canonical and has zero chart coordinate, so (u0, v0) is primitive
  return {u0, v0};
}

ProjLine line_with_direction(const TangentCone& frame, const ProjPoint& p,
                             const Int& u0, const Int& v0) {
  std::array<Int, 3> q{Int(0), Int(0), Int(0)};
  q[static_cast<size_t>(frame.axes[0])] = u0;
  q[static_cast<size_t>(frame.axes[1])] = v0;
  return line_through(p, ProjPoint(q));
}

LineRestriction restrict_to_line(const HomogPoly& F, const ProjLine& l) {
  if (F.is_zero()) throw Error(ErrorCode::ZeroCurve, "restriction of zero curve");
  const auto& c = l.coeffs();
  std::array<std::array<Int, 3>, 3> candidates = {
      std::array<Int, 3>{Int(0), c[2], -c[1]},
      std::array<Int, 3>{-c[2], Int(0), c[0]},
      std::array<Int, 3>{c[1], -c[0], Int(0)}};
  std::vector<ProjPoint> pts;
  for (const auto& cand : candidates) {
    if (cand[0] == 0 && cand[1] == 0 && cand[2] == 0) continue;
    ProjPoint p(cand);
    bool dup = false;
    for (const auto& q : pts) dup = dup || q == p;
    if (!dup) pts.push_back(p);
    if (pts.size() == 2) break;
  }
  if (pts.size() < 2)
    throw Error(ErrorCode::InternalInconsistency, "could not parametrize line");

  LineRestriction out;
  out.p0 = pts[0];
  out.p1 = pts[1];
  const int d = F.degree();
  // F(s*p0 + t*p1) as a binary form: substitute with w unused
  HomogPoly G = F.substitute_linear(out.p0.coords(), out.p1.coords(),
                                    {Int(0), Int(0), Int(0)});
  std::vector<Rational> coeffs(static_cast<size_t>(d) + 1, Rational(0));
  bool nonzero = false;
  for (int i = 0; i <= d; ++i) {
    Rational v = G.coeff({d - i, i, 0});
    coeffs[static_cast<size_t>(i)] = v;
    if (v != 0) nonzero = true;
  }
  out.form = BinaryForm(d, std::move(coeffs));
  out.is_component = !nonzero;
  return out;
}

ProjPoint LineRestriction::point_at(const Int& s, const Int& t) const {
  std::array<Int, 3> v;
  for (size_t i = 0; i < 3; ++i) v[i] = s * p0.coords()[i] + t * p1.coords()[i];
  return ProjPoint(v);
}

std::vector<Monomial> monomials_of_degree(int d) {
  std::vector<Monomial> out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
  return out;
}

}  // namespace cubic27
