/// @file monomial.hpp
/// @brief Sparse exponent vector in a flat global variable-index space.
///
/// Entries are packed (var << 32) | exp, sorted by variable index, zero
/// exponents omitted. Comparison is graded lexicographic (total degree first,
/// then earliest variable with the larger exponent), the order used both for
/// canonical printing and for exact division.
#pragma once

#include <cstdint>
#include <vector>

namespace sclab {

using VarIdx = std::uint32_t;

class Monomial {
public:
  Monomial() = default;
  static Monomial one() { return Monomial(); }
  static Monomial var(VarIdx v, std::uint32_t exp = 1) {
    Monomial m;
    if (exp > 0) m.e_.push_back(pack(v, exp));
    return m;
  }

  bool is_one() const { return e_.empty(); }
  std::size_t nfactors() const { return e_.size(); }
  VarIdx var_at(std::size_t i) const { return static_cast<VarIdx>(e_[i] >> 32); }
  std::uint32_t exp_at(std::size_t i) const { return static_cast<std::uint32_t>(e_[i]); }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (std::uint64_t p : e_) d += static_cast<std::uint32_t>(p);
    return d;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    r.e_.reserve(e_.size() + o.e_.size());
    std::size_t i = 0, j = 0;
    while (i < e_.size() && j < o.e_.size()) {
      VarIdx a = static_cast<VarIdx>(e_[i] >> 32), b = static_cast<VarIdx>(o.e_[j] >> 32);
      if (a < b) {
        r.e_.push_back(e_[i++]);
      } else if (b < a) {
        r.e_.push_back(o.e_[j++]);
      } else {
        std::uint64_t exp = static_cast<std::uint32_t>(e_[i]) + static_cast<std::uint64_t>(static_cast<std::uint32_t>(o.e_[j]));
        r.e_.push_back(pack(a, static_cast<std::uint32_t>(exp)));
        ++i, ++j;
      }
    }
    while (i < e_.size()) r.e_.push_back(e_[i++]);
    while (j < o.e_.size()) r.e_.push_back(o.e_[j++]);
    return r;
  }

  /// Exact divisibility: this / o, or false if some exponent would go negative.
  bool divide_by(const Monomial& o, Monomial& out) const {
    out.e_.clear();
    out.e_.reserve(e_.size());
    std::size_t i = 0, j = 0;
    while (j < o.e_.size()) {
      VarIdx b = static_cast<VarIdx>(o.e_[j] >> 32);
      while (i < e_.size() && static_cast<VarIdx>(e_[i] >> 32) < b) out.e_.push_back(e_[i++]);
      if (i == e_.size() || static_cast<VarIdx>(e_[i] >> 32) != b) return false;
      std::uint32_t ea = static_cast<std::uint32_t>(e_[i]), eb = static_cast<std::uint32_t>(o.e_[j]);
      if (ea < eb) return false;
      if (ea > eb) out.e_.push_back(pack(b, ea - eb));
      ++i, ++j;
    }
    while (i < e_.size()) out.e_.push_back(e_[i++]);
    return true;
  }

  /// Graded-lex compare: negative if *this < o, 0 if equal, positive if greater.
  int cmp(const Monomial& o) const {
    std::uint64_t da = degree(), db = o.degree();
    if (da != db) return da < db ? -1 : 1;
    std::size_t i = 0, j = 0;
    while (i < e_.size() && j < o.e_.size()) {
      VarIdx a = static_cast<VarIdx>(e_[i] >> 32), b = static_cast<VarIdx>(o.e_[j] >> 32);
      if (a != b) return a < b ? 1 : -1;  // positive exponent on an earlier variable wins
      std::uint32_t ea = static_cast<std::uint32_t>(e_[i]), eb = static_cast<std::uint32_t>(o.e_[j]);
      if (ea != eb) return ea > eb ? 1 : -1;
      ++i, ++j;
    }
    if (i < e_.size()) return 1;
    if (j < o.e_.size()) return -1;
    return 0;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return !(e_ == o.e_); }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t p : e_) {
      h ^= p;
      h *= 0xff51afd7ed558ccdull;
      h ^= h >> 33;
    }
    return static_cast<std::size_t>(h);
  }

private:
  static std::uint64_t pack(VarIdx v, std::uint32_t e) { return (static_cast<std::uint64_t>(v) << 32) | e; }
  std::vector<std::uint64_t> e_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Strict "greater" in graded-lex, for descending-ordered containers.
struct MonomialGrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.cmp(b) > 0; }
};

}  // namespace sclab
