/// @file common.hpp
/// @brief Error taxonomy and the global term-budget guard shared by all modules.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sclab {

enum class ErrKind {
  NotDivisible,
  MissingVariable,
  NotSquare,
  Singular,
  DimensionMismatch,
  IndexOutOfRange,
  ShapeViolation,
  NotMutable,
  ZeroClusterValue,
  WitnessSearchFailed,
  SingularPoint,
  BandDegenerate,
  IndexInvalid,
  RingMismatch,
  ParseError,
  BudgetExceeded,
  ConfigError,
};

/// All library failures throw this; `kind` is the contract-level error name.
class Error : public std::runtime_error {
public:
  Error(ErrKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrKind kind() const { return kind_; }

private:
  ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind k, const std::string& msg) { throw Error(k, msg); }

const char* errkind_name(ErrKind k);

/// Soft cap on materialized polynomial terms per operation chain.
/// 0 means unlimited. Exceeding the cap throws Error(BudgetExceeded); used to
/// attempt symbolic computations whose size is not known in advance and fail
/// cleanly instead of exhausting memory.
class TermBudget {
public:
  static std::uint64_t get();
  static void set(std::uint64_t cap);  // 0 = unlimited
  static void check(std::uint64_t candidate_size);

  /// RAII scope that installs a cap and restores the previous one.
  class Scope {
  public:
    explicit Scope(std::uint64_t cap) : prev_(get()) { set(cap); }
    ~Scope() { set(prev_); }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

  private:
    std::uint64_t prev_;
  };
};

}  // namespace sclab
