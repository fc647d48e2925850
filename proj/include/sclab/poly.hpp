/// @file poly.hpp
/// @brief Sparse multivariate polynomials over arbitrary-precision rationals.
///
/// Terms are kept in canonical form: graded-lex descending, no zero
/// coefficients, coefficients in lowest terms (mpq_class canonicalizes).
/// Multiplication has a serial reference path and an OpenMP path that
/// produce identical canonical results; exact division is the oracle behind
/// every "is a polynomial" regularity claim, so it either returns the exact
/// quotient or throws Error(NotDivisible).
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sclab/common.hpp"
#include "sclab/fp.hpp"
#include "sclab/monomial.hpp"

namespace sclab {

using Rat = mpq_class;

/// Lowest terms, positive denominator. mpq_class::canonicalize is cheap on
/// already-canonical values; call sites that build from raw parts use this.
inline Rat rat_canon(Rat q) {
  q.canonicalize();
  return q;
}

struct PTerm {
  Monomial m;
  Rat c;
};

using VarNamer = std::function<std::string(VarIdx)>;
using VarResolver = std::function<VarIdx(const std::string&)>;

class Poly {
public:
  Poly() = default;
  static Poly zero() { return Poly(); }
  static Poly constant(const Rat& c);
  static Poly variable(VarIdx v);
  static Poly monomial(Monomial m, Rat c);
  /// Takes unsorted/duplicated terms and canonicalizes.
  static Poly from_terms(std::vector<PTerm> terms);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
  /// Constant term value (0 for the zero polynomial); requires is_constant().
  Rat constant_value() const;
  std::size_t nterms() const { return t_.size(); }
  std::uint64_t total_degree() const;  // 0 for the zero polynomial
  const std::vector<PTerm>& terms() const { return t_; }
  const PTerm& leading() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly mul_scalar(const Rat& c) const;
  Poly pow(std::uint64_t e) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Exact quotient this / q; throws Error(NotDivisible) if none exists.
  Poly div_exact(const Poly& q) const;

  /// Evaluation; assignments are dense vectors indexed by variable id.
  Fp eval_fp(const std::vector<Fp>& assign) const;
  Rat eval_rat(const std::vector<Rat>& assign) const;

  /// Canonical graded-lex string, e.g. "2*x11^2*y12 - 3/4*x12 + 1".
  std::string str(const VarNamer& namer = nullptr) const;
  /// Parses the str() grammar (sums, products, powers, parentheses).
  static Poly parse(const std::string& text, const VarResolver& resolver);

  /// Serial reference multiply; the OpenMP path in operator* must match it exactly.
  static Poly mul_serial(const Poly& a, const Poly& b);
  static Poly mul_parallel(const Poly& a, const Poly& b);

private:
  void sort_and_compress();
  std::vector<PTerm> t_;
};

}  // namespace sclab
