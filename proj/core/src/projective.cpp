#include "cubic27/projective.hpp"

#include <sstream>

namespace cubic27 {
namespace detail {

std::array<Int, 3> canonicalize_triple(std::array<Int, 3> v) {
  Int g = gcd(gcd(v[0], v[1]), v[2]);
  if (g == 0) {
    throw Error(ErrorCode::InvalidHomogeneousCoordinates,
                "homogeneous triple must not be identically zero");
  }
  for (auto& x : v) x = exact_div(x, g);
  for (const auto& x : v) {
    if (x != 0) {
      if (x < 0)
        for (auto& y : v) y = -y;
      break;
    }
  }
  return v;
}

std::array<Int, 3> cross(const std::array<Int, 3>& a, const std::array<Int, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1],
          a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Int dot(const std::array<Int, 3>& a, const std::array<Int, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Int det3(const std::array<Int, 3>& r0, const std::array<Int, 3>& r1,
         const std::array<Int, 3>& r2) {
  return dot(r0, cross(r1, r2));
}

}  // namespace detail

ProjPoint::ProjPoint(std::array<Int, 3> coords)
    : c_(detail::canonicalize_triple(std::move(coords))) {}

std::strong_ordering ProjPoint::operator<=>(const ProjPoint& o) const {
  for (int i = 0; i < 3; ++i) {
    int c = cmp(c_[static_cast<size_t>(i)], o.c_[static_cast<size_t>(i)]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string ProjPoint::str() const {
  std::ostringstream os;
  os << "(" << c_[0] << ":" << c_[1] << ":" << c_[2] << ")";
  return os.str();
}

ProjLine::ProjLine(std::array<Int, 3> coeffs)
    : c_(detail::canonicalize_triple(std::move(coeffs))) {}

std::strong_ordering ProjLine::operator<=>(const ProjLine& o) const {
  for (int i = 0; i < 3; ++i) {
    int c = cmp(c_[static_cast<size_t>(i)], o.c_[static_cast<size_t>(i)]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string ProjLine::str() const {
  std::ostringstream os;
  os << "[" << c_[0] << ":" << c_[1] << ":" << c_[2] << "]";
  return os.str();
}

namespace {
std::array<Int, 3> clear_denominators(const std::array<Rational, 3>& raw) {
  Int l = lcm(lcm(raw[0].get_den(), raw[1].get_den()), raw[2].get_den());
  std::array<Int, 3> v;
  for (size_t i = 0; i < 3; ++i) v[i] = raw[i].get_num() * exact_div(l, raw[i].get_den());
  return v;
}
}  // namespace

ProjPoint normalize(const std::array<Rational, 3>& raw) {
  return ProjPoint(clear_denominators(raw));
}

ProjLine normalize_line(const std::array<Rational, 3>& raw) {
  return ProjLine(clear_denominators(raw));
}

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
  if (p == q)
    throw Error(ErrorCode::DegenerateSpan, "line_through requires distinct points");
  return ProjLine(detail::cross(p.coords(), q.coords()));
}

ProjPoint meet_lines(const ProjLine& l1, const ProjLine& l2) {
  if (l1 == l2)
    throw Error(ErrorCode::DegenerateSpan, "meet_lines requires distinct lines");
  return ProjPoint(detail::cross(l1.coeffs(), l2.coeffs()));
}

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  return detail::det3(p.coords(), q.coords(), r.coords()) == 0;
}

bool concurrent(const ProjLine& l1, const ProjLine& l2, const ProjLine& l3) {
  return detail::det3(l1.coeffs(), l2.coeffs(), l3.coeffs()) == 0;
}

bool incident(const ProjPoint& p, const ProjLine& l) {
  return detail::dot(p.coords(), l.coeffs()) == 0;
}

namespace {
// Bareiss fraction-free determinant of an n x n integer matrix.
Int bareiss_det(std::vector<std::vector<Int>> m) {
  const size_t n = m.size();
  Int denom(1);
  int sign = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return Int(0);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], denom);
      }
      m[i][k] = 0;
    }
    denom = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}
}  // namespace

Int conic_determinant(const std::array<ProjPoint, 6>& pts) {
  std::vector<std::vector<Int>> m(6, std::vector<Int>(6));
  for (size_t i = 0; i < 6; ++i) {
    const auto& c = pts[i].coords();
    m[i][0] = c[0] * c[0];
    m[i][1] = c[0] * c[1];
    m[i][2] = c[1] * c[1];
    m[i][3] = c[0] * c[2];
    m[i][4] = c[1] * c[2];
    m[i][5] = c[2] * c[2];
  }
  return bareiss_det(std::move(m));
}

std::optional<Rational> parse_rational(const std::string& text) {
  // Accepted: [+-]digits or [+-]digits/[+]digits. Anything else (in
  // particular '.', 'e', spaces) is rejected so ingestion stays exact.
  if (text.empty()) return std::nullopt;
  size_t i = 0;
  auto scan_int = [&](bool allow_sign) -> std::optional<std::string> {
    std::string out;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (!allow_sign) return std::nullopt;
      if (text[i] == '-') out.push_back('-');
      ++i;
    }
    size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') out.push_back(text[i++]);
    if (i == start) return std::nullopt;
    return out;
  };
  auto num = scan_int(true);
  if (!num) return std::nullopt;
  Int n(*num);
  Int d(1);
  if (i < text.size()) {
    if (text[i] != '/') return std::nullopt;
    ++i;
    auto den = scan_int(false);
    if (!den || i != text.size()) return std::nullopt;
    d = Int(*den);
    if (d == 0) return std::nullopt;
  }
  return make_rational(n, d);
}

}  // namespace cubic27
