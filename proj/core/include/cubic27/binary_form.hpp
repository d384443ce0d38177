#pragma once

#include <utility>
#include <vector>

#include "cubic27/poly.hpp"
#include "cubic27/roots.hpp"

namespace cubic27 {

/// Root of a binary form as a primitive integer pair (s0 : t0), first
/// nonzero entry positive.
struct BinaryRoot {
  Int s;
  Int t;
  int multiplicity = 1;
  bool operator==(const BinaryRoot& o) const { return s == o.s && t == o.t; }
};

struct BinaryRootCount {
  int total_closure = 0;                 // distinct roots over the algebraic closure
  std::vector<BinaryRoot> rational;      // exact rational roots with multiplicities
};

/// Homogeneous form of degree d in two variables (s, t); coefficient i
/// multiplies s^(d-i) t^i.
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(int degree, std::vector<Rational> coeffs);

  int degree() const { return degree_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](size_t i) const { return c_[i]; }
  bool is_zero() const;

  Rational eval(const Rational& s, const Rational& t) const;
  Int eval_int(const Int& s, const Int& t) const;

  /// Order of vanishing at a projective parameter value.
  int multiplicity_at(const Int& s0, const Int& t0) const;

  /// b^2 - 4ac of a quadratic form; the two directions coincide iff zero.
  Rational quadratic_discriminant() const;

  bool operator==(const BinaryForm& o) const { return degree_ == o.degree_ && c_ == o.c_; }

  BinaryForm operator*(const BinaryForm& o) const;
  BinaryForm operator+(const BinaryForm& o) const;  // same degree required
  BinaryForm operator-(const BinaryForm& o) const;
  BinaryForm operator*(const Rational& s) const;

 private:
  int degree_ = -1;
  std::vector<Rational> c_;
};

/// Homogeneous resultant with the declared degrees (no trimming); zero iff
/// the forms share a projective root over the closure.
Rational binary_resultant(const BinaryForm& a, const BinaryForm& b);

/// Distinct-root data: squarefree degree over the closure plus the exact
/// rational roots.
BinaryRootCount distinct_root_count(const BinaryForm& f);

}  // namespace cubic27
