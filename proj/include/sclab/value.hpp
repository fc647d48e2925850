/// @file value.hpp
/// @brief Scalar sum type over the three computation rings, plus ring context.
///
/// A Value is a big rational, a prime-field element, or a sparse polynomial
/// over rationals. Rationals promote implicitly into either other ring
/// (integer sign constants and interpolation nodes are written once and work
/// in every ring); prime-field and polynomial values never mix.
#pragma once

#include <memory>
#include <random>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "sclab/common.hpp"
#include "sclab/fp.hpp"
#include "sclab/poly.hpp"

namespace sclab {

enum class RingKind { Rational, PrimeField, Symbolic };

/// Bidirectional variable-name table for symbolic contexts.
class VarTable {
public:
  VarIdx add(const std::string& name);
  VarIdx require(const std::string& name) const;
  bool contains(const std::string& name) const { return index_.count(name) != 0; }
  const std::string& name(VarIdx v) const;
  std::size_t size() const { return names_.size(); }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VarIdx> index_;
};

struct RingSpec {
  RingKind kind = RingKind::Rational;
  std::uint64_t modulus = 0;                 // PrimeField only
  std::shared_ptr<const VarTable> vars;      // Symbolic only

  static RingSpec rational() { return RingSpec{RingKind::Rational, 0, nullptr}; }
  static RingSpec prime_field(std::uint64_t p = Fp::default_modulus()) { return RingSpec{RingKind::PrimeField, p, nullptr}; }
  static RingSpec symbolic(std::shared_ptr<const VarTable> vars) { return RingSpec{RingKind::Symbolic, 0, std::move(vars)}; }

  bool compatible(const RingSpec& o) const { return kind == o.kind && modulus == o.modulus; }
  std::string kind_name() const;
};

class Value {
public:
  Value() : v_(Rat(0)) {}
  explicit Value(Rat r) : v_(rat_canon(std::move(r))) {}
  explicit Value(long x) : v_(Rat(x)) {}
  explicit Value(Fp f) : v_(f) {}
  explicit Value(Poly p) : v_(std::move(p)) {}

  static Value zero(const RingSpec& ring);
  static Value one(const RingSpec& ring);
  static Value integer(long x, const RingSpec& ring);

  RingKind kind() const;
  bool is_zero() const;
  bool is_rational() const { return std::holds_alternative<Rat>(v_); }

  const Rat& as_rat() const;
  const Fp& as_fp() const;
  const Poly& as_poly() const;

  Value operator+(const Value& o) const;
  Value operator-(const Value& o) const;
  Value operator*(const Value& o) const;
  Value operator-() const;
  /// Field division over rationals / prime field; exact polynomial division
  /// (Error(NotDivisible) on remainder) in the symbolic ring.
  Value div(const Value& o) const;
  Value pow(std::uint64_t e) const;
  bool operator==(const Value& o) const;
  bool operator!=(const Value& o) const { return !(*this == o); }

  std::string str(const VarNamer& namer = nullptr) const;
  std::string str(const RingSpec& ring) const;
  static Value parse(const std::string& text, const RingSpec& ring);

private:
  std::variant<Rat, Fp, Poly> v_;
};

/// Uniform residue in [0, p).
Fp random_fp(std::mt19937_64& g, std::uint64_t p);
/// Uniform residue in [1, p).
Fp random_fp_nonzero(std::mt19937_64& g, std::uint64_t p);
/// Numerator in [-bound, bound], denominator in [1, bound].
Rat random_rat(std::mt19937_64& g, long bound = 100);

/// Random element of a field ring (Rational or PrimeField).
Value random_field_value(const RingSpec& ring, std::mt19937_64& g);
Value random_field_value_nonzero(const RingSpec& ring, std::mt19937_64& g);

}  // namespace sclab
