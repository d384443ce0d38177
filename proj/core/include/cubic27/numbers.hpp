#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace cubic27 {

/// Arbitrary-precision integer and rational, the only scalar types used by
/// the geometry. All arithmetic in this library is exact; no floating point
/// anywhere.
using Int = mpz_class;
using Rational = mpq_class;

enum class ErrorCode {
  InvalidHomogeneousCoordinates,
  DegenerateSpan,
  ZeroCurve,
  NotOnCurve,
  ZeroForm,
  DegeneratePencil,
  NotApplicable,
  ComponentOfD,
  ResourceGuard,
  ConstructionFailed,
  InternalInconsistency,
  InvalidInput,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidHomogeneousCoordinates: return "InvalidHomogeneousCoordinates";
    case ErrorCode::DegenerateSpan: return "DegenerateSpan";
    case ErrorCode::ZeroCurve: return "ZeroCurve";
    case ErrorCode::NotOnCurve: return "NotOnCurve";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::DegeneratePencil: return "DegeneratePencil";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::ComponentOfD: return "ComponentOfD";
    case ErrorCode::ResourceGuard: return "ResourceGuard";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

inline int sign(const Int& a) { return sgn(a); }
inline int sign(const Rational& a) { return sgn(a); }

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Exact quotient; throws if b does not divide a.
inline Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw Error(ErrorCode::InternalInconsistency, "exact_div by zero");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw Error(ErrorCode::InternalInconsistency, "exact_div not exact");
  return q;
}

inline Int pow(const Int& a, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
  return r;
}

inline Rational pow(const Rational& a, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), a.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), a.get_den().get_mpz_t(), e);
  return r;
}

/// Builds a canonical rational from a numerator/denominator pair.
inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses an exact fraction "p", "-p", "p/q". Floating-point syntax is
/// rejected: ingestion must be exact.
std::optional<Rational> parse_rational(const std::string& text);

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rational& a) { return a.get_str(); }

}  // namespace cubic27
