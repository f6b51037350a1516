#pragma once

#include <cstdint>

namespace tscx {

// SplitMix64 finalizer. Used to expand a 64-bit seed into generator state
// and to derive per-replicate seeds.
constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed for replicate `index` of a run seeded with `base`:
// splitmix64 applied to (base XOR splitmix64(index)).
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
  std::uint64_t s = index;
  std::uint64_t mixed = base ^ splitmix64(s);
  return splitmix64(mixed);
}

/// xoshiro256** 1.0 (Blackman and Vigna), state filled from the seed by
/// four SplitMix64 draws. All series generation goes through this engine so
/// a seed reproduces the same samples on every platform.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr Xoshiro256(std::uint64_t seed) noexcept {
    std::uint64_t sm = seed;
    for (auto& word : s_) word = splitmix64(sm);
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  constexpr result_type operator()() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform on [0, 1) with 53 random bits.
  constexpr double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // Uniform on the open interval (0, 1): the 53-bit grid shifted by half a step.
  constexpr double uniform_open() noexcept {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal by inversion of one open-interval uniform.
  double normal() noexcept;

  // Exponential with the given rate by inversion: -ln(1 - u) / rate.
  double exponential(double rate = 1.0) noexcept;

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4]{};
};

// Standard normal quantile (Wichura's AS 241, PPND16), relative accuracy
// about 1e-16 on (0, 1).
double normal_quantile(double p);

}  // namespace tscx
