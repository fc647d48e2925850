/// @file rng.hpp
/// @brief Deterministic seeding: a SplitMix64 root stream that counter-splits
/// into independent per-trial generators, so parallel trial batches reproduce
/// the serial results exactly.
#pragma once

#include <cstdint>
#include <random>

namespace sclab {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Generator for one trial; trial index i of root seed s always yields the
/// same stream regardless of scheduling.
inline std::mt19937_64 rng_for_trial(std::uint64_t root_seed, std::uint64_t trial_index) {
  std::uint64_t s = root_seed;
  (void)splitmix64(s);  // decorrelate small adjacent seeds
  s ^= 0xd1342543de82ef95ull * (trial_index + 1);
  std::uint64_t a = splitmix64(s);
  std::uint64_t b = splitmix64(s);
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return std::mt19937_64(seq);
}

inline std::uint64_t uniform_below(std::mt19937_64& g, std::uint64_t n) {
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(g);
}

}  // namespace sclab
