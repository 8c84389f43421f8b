#pragma once

#include <cstdint>

namespace specga {

// splitmix64 (Steele, Lea, Flood) — used only to derive independent seeds
// for the different random streams (environment sensing, GA loop, repeated
// runs), never as the generator itself.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic sub-seed for stream `stream` of a base seed. Distinct
// streams fed the same base seed stay statistically independent.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(base ^ splitmix64(stream));
}

}  // namespace specga
