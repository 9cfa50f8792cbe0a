#pragma once

#include <cstdint>

namespace graphentropy {

/// Seed for every stochastic generator. Same seed and parameters give the
/// same graph, bit for bit.
struct RngSeed {
  std::uint64_t value = 0;
};

/// Counter-based SplitMix64 stream.
///
/// The k-th output (k = 0, 1, ...) is `mix64(seed + (k + 1) * 0x9E3779B97F4A7C15)`
/// where `mix64` is the SplitMix64 finalizer:
///
///     z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///     z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///     z =  z ^ (z >> 31)
///
/// Doubles in [0, 1) take the top 53 bits: `(x >> 11) * 2^-53`.
/// Bounded integers in [0, n) use rejection: draw x until x >= (2^64 - n) mod n,
/// then return x mod n.
class CounterRng {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit CounterRng(RngSeed seed) noexcept : seed_(seed.value) {}

  static constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() noexcept {
    ++counter_;
    return mix64(seed_ + counter_ * kGamma);
  }

  double uniform01() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n); n must be positive.
  std::uint64_t uniform_below(std::uint64_t n) noexcept {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t x = next_u64();
      if (x >= threshold) return x % n;
    }
  }

  bool bernoulli(double p) noexcept { return uniform01() < p; }

  std::uint64_t draws() const noexcept { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// Independent per-sample seed derived from a master seed:
/// `mix64(mix64(master) + (index + 1) * kGamma)`.
constexpr RngSeed derive_seed(RngSeed master, std::uint64_t index) noexcept {
  return RngSeed{CounterRng::mix64(CounterRng::mix64(master.value) + (index + 1) * CounterRng::kGamma)};
}

}  // namespace graphentropy
