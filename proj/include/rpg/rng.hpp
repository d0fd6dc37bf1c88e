#pragma once

#include <cmath>
#include <cstdint>

namespace rpg {

// SplitMix64 finalizer, used both for seeding and for key derivation.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t combine_keys(std::uint64_t key, std::uint64_t index) {
  return mix64(key ^ mix64(index + 0x9e3779b97f4a7c15ull));
}

// Counter-keyed splittable random stream (xoshiro256++ core).
//
// A stream is identified by a 64-bit key; child(i) derives an independent
// stream from (key, i) without touching the parent's state. Episode streams
// are derived as root.child(purpose).child(iteration).child(episode), so the
// draws a given episode sees depend only on those indices and never on thread
// scheduling. All distributions below are implemented directly on the 64-bit
// output so the byte stream is identical across platforms and standard
// libraries.
class RngStream {
 public:
  explicit RngStream(std::uint64_t key) : key_(key) {
    std::uint64_t s = key;
    for (auto& word : state_) {
      s = mix64(s);
      word = s;
    }
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
  }

  RngStream child(std::uint64_t index) const {
    return RngStream(combine_keys(key_, index));
  }

  std::uint64_t key() const { return key_; }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; consumes exactly two uniforms per call.
  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  // Uniform integer in [0, n) via 128-bit multiply (no modulo bias worth
  // caring about at these ranges, and bit-for-bit reproducible).
  std::int64_t uniform_int(std::int64_t n) {
    return static_cast<std::int64_t>(
        (static_cast<unsigned __int128>(next_u64()) * static_cast<std::uint64_t>(n)) >> 64);
  }

  // Draw from a finite distribution given by `probs[0..n)`; assumes the
  // entries are nonnegative and sum to ~1. Returns n-1 on rounding overshoot.
  int categorical(const double* probs, int n) {
    const double u = uniform();
    double cum = 0.0;
    for (int i = 0; i < n - 1; ++i) {
      cum += probs[i];
      if (u < cum) return i;
    }
    return n - 1;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t key_;
  std::uint64_t state_[4];
};

}  // namespace rpg
