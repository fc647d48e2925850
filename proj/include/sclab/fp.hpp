/// @file fp.hpp
/// @brief Prime-field scalar for randomized identity testing.
///
/// Residues are reduced into [0, p). The default modulus is the Mersenne
/// prime 2^61 - 1, overridable through the SCLAB_MODULUS environment
/// variable (checked once, must be an odd prime below 2^62). Every element
/// carries its modulus so that values from different contexts cannot be
/// mixed silently.
#pragma once

#include <cstdint>

#include "sclab/common.hpp"

namespace sclab {

class Fp {
public:
  static constexpr std::uint64_t kDefaultModulus = (std::uint64_t(1) << 61) - 1;

  /// Modulus used by default-constructed elements: SCLAB_MODULUS if set, else 2^61-1.
  static std::uint64_t default_modulus();

  Fp() : v_(0), p_(default_modulus()) {}
  Fp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}
  static Fp from_int(long long x, std::uint64_t p);

  std::uint64_t residue() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(const Fp& o) const;
  Fp operator-(const Fp& o) const;
  Fp operator*(const Fp& o) const;
  Fp operator/(const Fp& o) const;
  Fp operator-() const;
  Fp inv() const;
  Fp pow(std::uint64_t e) const;
  bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }

private:
  void check_same(const Fp& o) const {
    if (p_ != o.p_) fail(ErrKind::RingMismatch, "prime-field moduli differ");
  }
  std::uint64_t v_;
  std::uint64_t p_;
};

/// Deterministic Miller-Rabin valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p);

}  // namespace sclab
