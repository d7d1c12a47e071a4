#pragma once

#include <cmath>
#include <cstdint>

namespace recsup {

// Counter-based pseudo-random numbers. Every value is a pure function of
// (seed, counter), so draws are identical no matter how work is split across
// threads or in which order entries are generated.

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

// One 64-bit word at position `counter` of the stream identified by `seed`.
inline std::uint64_t rng_word(std::uint64_t seed, std::uint64_t counter) {
  return detail::mix64(detail::mix64(seed) ^ detail::mix64(counter ^ 0xd6e8feb86659fd93ULL));
}

// Derives a child stream key; used to key per-trial / per-entry streams.
inline std::uint64_t rng_substream(std::uint64_t seed, std::uint64_t stream) {
  return detail::mix64(detail::mix64(seed) + 0x9e3779b97f4a7c15ULL * (stream + 1));
}

inline double rng_uniform01(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(rng_word(seed, counter) >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller on counters (2i, 2i+1) of the stream.
inline double rng_normal(std::uint64_t seed, std::uint64_t index) {
  const double u1 = rng_uniform01(seed, 2 * index);
  const double u2 = rng_uniform01(seed, 2 * index + 1);
  const double r = std::sqrt(-2.0 * std::log1p(-u1));
  return r * std::cos(6.283185307179586476925286766559 * u2);
}

// Stateful view of a counter stream, for sequential draws inside one task.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t stream) : key_(rng_substream(seed, stream)) {}

  std::uint64_t next_word() { return rng_word(key_, counter_++); }

  double uniform01() { return static_cast<double>(next_word() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double normal() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    return r * std::cos(6.283185307179586476925286766559 * u2);
  }

  // Uniform integer in [0, n). Multiply-shift; bias is O(n / 2^64).
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next_word()) * n) >> 64);
  }

  int sign() { return (next_word() & 1) ? 1 : -1; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace recsup
