#pragma once

#include <cmath>
#include <cstdint>

// Deterministic random streams. The library needs bit-identical results
// for a given seed regardless of platform or evaluation order, so we use
// the splitmix64 finalizer as a counter-based generator instead of the
// implementation-defined std distributions. std::mt19937_64 engines are
// still used where a sequential stream is natural (PSO particles).

namespace straycal::rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// i-th output of the splitmix64 stream started at `seed`.
inline std::uint64_t stream_at(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed + index * 0x9e3779b97f4a7c15ULL);
}

// Map 64 random bits to (0, 1]; never returns 0, safe under log().
inline double unit_open(std::uint64_t bits) {
  return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
}

// Map 64 random bits to [0, 1).
inline double unit_half_open(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Standard normal draw addressed by (seed, counter); Box-Muller over two
// counter-hashed uniforms, so parallel callers get identical streams.
inline double normal_at(std::uint64_t seed, std::uint64_t counter) {
  const double u1 = unit_open(stream_at(seed, 2 * counter));
  const double u2 = unit_half_open(stream_at(seed, 2 * counter + 1));
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(6.283185307179586476925286766559 * u2);
}

}  // namespace straycal::rng
