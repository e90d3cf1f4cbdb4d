#pragma once

#include <cstdint>
#include <random>

namespace gapkit {

// splitmix64; per-trial seeds are successive outputs of the stream started
// at the master seed, so suites reproduce across machines and languages.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed of trial `index` under `master`.
inline std::uint64_t trial_seed(std::uint64_t master, int index) {
  std::uint64_t state = master;
  std::uint64_t s = 0;
  for (int i = 0; i <= index; ++i) s = splitmix64(state);
  return s;
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

}  // namespace gapkit
