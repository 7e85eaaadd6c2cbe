// rng.hpp - counter-based random streams and seed derivation
//
// Every random number in qrc comes from a CounterRng. The n-th output
// (n = 0, 1, 2, ...) of a stream keyed by `key` is
//
//     mix64(key + (n + 1) * 0x9E3779B97F4A7C15)
//
// where mix64 is the SplitMix64 finalizer
//
//     z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//     z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//     z =  z ^ (z >> 31)
//
// with all arithmetic modulo 2^64. Uniform doubles on [0, 1) take the top
// 53 bits: (x >> 11) * 2^-53. This sequence is identical to the reference
// SplitMix64 generator seeded with `key`, so streams can be reproduced in
// any language from the key alone.
//
// Per-sample keys are derived from (master_seed, stream_tag, sample_index):
//
//     derive_seed(m, t, i) = mix64(mix64(m ^ t) + (i + 1) * 0x9E3779B97F4A7C15)

#pragma once

#include <cstdint>

namespace qrc {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Stream tags; the ASCII bytes of the stream name packed big-endian.
namespace stream {
inline constexpr std::uint64_t kDisorder = 0x646973'6f72646572ULL; // "disorder"
inline constexpr std::uint64_t kInputs = 0x0000'696e70757473ULL;   // "inputs"
inline constexpr std::uint64_t kNoise = 0x0000'00'6e6f697365ULL;   // "noise"
} // namespace stream

constexpr std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream_tag,
                                    std::uint64_t sample_index) {
  return mix64(mix64(master_seed ^ stream_tag) + (sample_index + 1) * kGoldenGamma);
}

class CounterRng {
public:
  explicit constexpr CounterRng(std::uint64_t key) : key_(key) {}

  constexpr std::uint64_t next() {
    ++counter_;
    return mix64(key_ + counter_ * kGoldenGamma);
  }

  /// Uniform on [0, 1) with 53 bits of mantissa.
  constexpr double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform on [lo, hi).
  constexpr double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Fair coin from the top bit.
  constexpr int bit() { return static_cast<int>(next() >> 63); }

  constexpr std::uint64_t key() const { return key_; }
  constexpr std::uint64_t counter() const { return counter_; }

private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

} // namespace qrc
