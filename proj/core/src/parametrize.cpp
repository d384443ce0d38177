#include "cubic27/parametrize.hpp"

namespace cubic27 {

ProjPoint Parametrization::at(const Int& s, const Int& t) const {
  std::array<Rational, 3> v;
  for (size_t i = 0; i < 3; ++i) v[i] = coords[i].eval(Rational(s), Rational(t));
  return normalize(v);
}

BinaryForm Parametrization::compose_into(const HomogPoly& F) const {
  const int d = F.degree();
  const int pd = coords[0].degree();
  BinaryForm acc(d * pd, std::vector<Rational>(static_cast<size_t>(d * pd) + 1, Rational(0)));
  for (const auto& [m, v] : F.coeffs()) {
    BinaryForm term(0, {Rational(1)});
    for (int i = 0; i < 3; ++i)
      for (int e = 0; e < m[static_cast<size_t>(i)]; ++e) term = term * coords[static_cast<size_t>(i)];
    acc = acc + term * v;
  }
  return acc;
}

Parametrization parametrize_nodal_cubic(const HomogPoly& F, const ProjPoint& node) {
  if (F.is_zero() || F.degree() != 3)
    throw Error(ErrorCode::NotApplicable, "parametrization needs a plane cubic");
  if (!is_node(F, node))
    throw Error(ErrorCode::NotApplicable, "the marked point is not a node");
  TangentCone tc = tangent_cone(F, node);

  // In the node chart F(u e_i + v e_j + w p) = w*Q2(u,v) + Q3(u,v); the line
  // with direction (s:t) meets the cubic residually at
  //   X(s,t) = Q2(s,t) (s e_i + t e_j) - Q3(s,t) p.
  const int d = 3;
  std::array<Int, 3> ei{Int(0), Int(0), Int(0)}, ej{Int(0), Int(0), Int(0)};
  ei[static_cast<size_t>(tc.axes[0])] = 1;
  ej[static_cast<size_t>(tc.axes[1])] = 1;
  HomogPoly G = F.substitute_linear(ei, ej, node.coords());
  auto local_form = [&](int k) {
    std::vector<Rational> c(static_cast<size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) c[static_cast<size_t>(i)] = G.coeff({k - i, i, d - k});
    return BinaryForm(k, std::move(c));
  };
  BinaryForm Q2 = local_form(2);
  BinaryForm Q3 = local_form(3);
  if (Q3.is_zero() || binary_resultant(Q2, Q3) == 0)
    throw Error(ErrorCode::NotApplicable,
                "cubic has a line component through the node");

  BinaryForm s_lin(1, {Rational(1), Rational(0)});
  BinaryForm t_lin(1, {Rational(0), Rational(1)});
  Parametrization out;
  for (size_t c = 0; c < 3; ++c) {
    BinaryForm lin = s_lin * Rational(ei[c]) + t_lin * Rational(ej[c]);
    out.coords[c] = Q2 * lin - Q3 * Rational(node.coords()[c]);
  }
  out.base_point_free = true;  // checked via the resultant above

  BinaryForm check = out.compose_into(F);
  if (!check.is_zero())
    throw Error(ErrorCode::InternalInconsistency, "parametrization does not satisfy the cubic");
  return out;
}

}  // namespace cubic27
