#pragma once

#include <cstdint>
#include <random>

namespace cmetas {

// SplitMix64 mixer; spreads (master seed, stream index) pairs into
// well-separated engine seeds so replicas get independent streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::mt19937_64 make_stream(std::uint64_t master_seed, std::uint64_t stream) {
  return std::mt19937_64{splitmix64(master_seed + 0x632be59bd9b4e019ULL * (stream + 1))};
}

// Uniform draw in the open interval (0,1); never returns an endpoint,
// so inverse-CDF samplers stay finite.
inline double uniform_open(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace cmetas
