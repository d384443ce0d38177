#include "cubic27/lattice.hpp"

#include <sstream>

namespace cubic27 {

std::string DivClass::str() const {
  std::ostringstream os;
  os << "(" << e0 << ";";
  for (size_t i = 0; i < 6; ++i) os << (i ? "," : " ") << e[i];
  os << ")";
  return os.str();
}

std::string LineLabel::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Exceptional: os << "E" << i; break;
    case Kind::Chord: os << "L" << i << j; break;
    case Kind::Conic: os << "C" << i; break;
  }
  return os.str();
}

long pairing(const DivClass& a, const DivClass& b) {
  long acc = a.e0 * b.e0;
  for (size_t i = 0; i < 6; ++i) acc -= a.e[i] * b.e[i];
  return acc;
}

DivClass strict_transform_class(long d, const std::array<long, 6>& m) {
  if (d < 1) throw Error(ErrorCode::InvalidInput, "degree must be positive");
  DivClass c;
  c.e0 = d;
  for (size_t i = 0; i < 6; ++i) {
    if (m[i] < 0) throw Error(ErrorCode::InvalidInput, "multiplicities must be nonnegative");
    c.e[i] = -m[i];
  }
  return c;
}

std::vector<std::pair<LineLabel, DivClass>> lines_27() {
  std::vector<std::pair<LineLabel, DivClass>> out;
  for (int i = 1; i <= 6; ++i) {
    DivClass c;
    c.e[static_cast<size_t>(i - 1)] = 1;
    out.push_back({LineLabel::exceptional(i), c});
  }
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      DivClass c;
      c.e0 = 1;
      c.e[static_cast<size_t>(i - 1)] = -1;
      c.e[static_cast<size_t>(j - 1)] = -1;
      out.push_back({LineLabel::chord(i, j), c});
    }
  for (int i = 1; i <= 6; ++i) {
    DivClass c;
    c.e0 = 2;
    for (int k = 1; k <= 6; ++k)
      if (k != i) c.e[static_cast<size_t>(k - 1)] = -1;
    out.push_back({LineLabel::conic(i), c});
  }
  return out;
}

IncidenceReport incidence_report() {
  auto lines = lines_27();
  IncidenceReport rep;
  rep.counts_verified = true;
  const DivClass H = hyperplane_class();
  for (size_t a = 0; a < lines.size(); ++a) {
    LineIncidence li;
    li.label = lines[a].first;
    li.cls = lines[a].second;
    for (size_t b = 0; b < lines.size(); ++b) {
      if (a == b) continue;
      if (pairing(lines[a].second, lines[b].second) == 1) li.neighbors.push_back(static_cast<int>(b));
    }
    for (size_t x = 0; x < li.neighbors.size(); ++x)
      for (size_t y = x + 1; y < li.neighbors.size(); ++y) {
        const DivClass& M = lines[static_cast<size_t>(li.neighbors[x])].second;
        const DivClass& N = lines[static_cast<size_t>(li.neighbors[y])].second;
        if (pairing(M, N) == 1 && (lines[a].second + M + N) == H)
          li.triangles.push_back({li.neighbors[x], li.neighbors[y]});
      }
    if (li.neighbors.size() != 10 || li.triangles.size() != 5) rep.counts_verified = false;
    // the five pairs must partition the ten neighbors
    std::array<int, 27> used{};
    for (auto [m, n] : li.triangles) {
      used[static_cast<size_t>(m)] += 1;
      used[static_cast<size_t>(n)] += 1;
    }
    for (int nb : li.neighbors)
      if (used[static_cast<size_t>(nb)] != 1) rep.counts_verified = false;
    rep.lines.push_back(std::move(li));
  }
  return rep;
}

std::vector<DivClass> line_class_box_search() {
  std::vector<DivClass> out;
  const DivClass mk = canonical_class();
  for (long a = 0; a <= 2; ++a) {
    std::array<long, 6> b{};
    for (b[0] = -1; b[0] <= 1; ++b[0])
      for (b[1] = -1; b[1] <= 1; ++b[1])
        for (b[2] = -1; b[2] <= 1; ++b[2])
          for (b[3] = -1; b[3] <= 1; ++b[3])
            for (b[4] = -1; b[4] <= 1; ++b[4])
              for (b[5] = -1; b[5] <= 1; ++b[5]) {
                DivClass c{a, b};
                if (pairing(c, c) == -1 && pairing(c, mk) == -1) out.push_back(c);
              }
  }
  return out;
}

}  // namespace cubic27
