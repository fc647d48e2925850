#include "sclab/fp.hpp"

#include <cstdlib>
#include <string>

namespace sclab {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // This base set decides primality for every n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t Fp::default_modulus() {
  static const std::uint64_t p = [] {
    if (const char* env = std::getenv("SCLAB_MODULUS")) {
      char* end = nullptr;
      std::uint64_t v = std::strtoull(env, &end, 10);
      if (end == env || *end != '\0' || v < 3 || v >= (std::uint64_t(1) << 62) || !is_prime_u64(v)) {
        fail(ErrKind::ConfigError, std::string("SCLAB_MODULUS is not an odd prime below 2^62: ") + env);
      }
      return v;
    }
    return kDefaultModulus;
  }();
  return p;
}

Fp Fp::from_int(long long x, std::uint64_t p) {
  long long r = x % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return Fp(static_cast<std::uint64_t>(r), p);
}

Fp Fp::operator+(const Fp& o) const {
  check_same(o);
  std::uint64_t s = v_ + o.v_;
  if (s >= p_) s -= p_;
  return Fp(s, p_);
}

Fp Fp::operator-(const Fp& o) const {
  check_same(o);
  std::uint64_t s = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
  return Fp(s, p_);
}

Fp Fp::operator*(const Fp& o) const {
  check_same(o);
  return Fp(mulmod_u64(v_, o.v_, p_), p_);
}

Fp Fp::operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }

Fp Fp::inv() const {
  if (v_ == 0) fail(ErrKind::Singular, "inverse of 0 in prime field");
  return Fp(powmod_u64(v_, p_ - 2, p_), p_);
}

Fp Fp::operator/(const Fp& o) const {
  check_same(o);
  return *this * o.inv();
}

Fp Fp::pow(std::uint64_t e) const { return Fp(powmod_u64(v_, e, p_), p_); }

const char* errkind_name(ErrKind k) {
  switch (k) {
    case ErrKind::NotDivisible: return "NotDivisible";
    case ErrKind::MissingVariable: return "MissingVariable";
    case ErrKind::NotSquare: return "NotSquare";
    case ErrKind::Singular: return "Singular";
    case ErrKind::DimensionMismatch: return "DimensionMismatch";
    case ErrKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrKind::ShapeViolation: return "ShapeViolation";
    case ErrKind::NotMutable: return "NotMutable";
    case ErrKind::ZeroClusterValue: return "ZeroClusterValue";
    case ErrKind::WitnessSearchFailed: return "WitnessSearchFailed";
    case ErrKind::SingularPoint: return "SingularPoint";
    case ErrKind::BandDegenerate: return "BandDegenerate";
    case ErrKind::IndexInvalid: return "IndexInvalid";
    case ErrKind::RingMismatch: return "RingMismatch";
    case ErrKind::ParseError: return "ParseError";
    case ErrKind::BudgetExceeded: return "BudgetExceeded";
    case ErrKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace sclab
