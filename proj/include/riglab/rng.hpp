#pragma once

#include <cstdint>

namespace riglab {

// Portable seeding and sampling. Every constant used below is fixed so that a
// (master, stream) pair yields the same variates on every platform:
//
//   mix64(z):   SplitMix64 finalizer
//               z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
//               z = (z ^ (z >> 27)) * 0x94d049bb133111eb
//               z ^ (z >> 31)
//   stream for trial t under master m:  mix64(m ^ mix64(t + 1))
//   engine:     xoshiro256**, state filled by SplitMix64 (increment
//               0x9e3779b97f4a7c15) started at mix64(m) ^ stream
//   uniform01:  (next() >> 11) * 2^-53, in [0, 1)
//   uniform_below(k): Lemire multiply-shift with rejection

std::uint64_t mix64(std::uint64_t z) noexcept;

struct RngSeed {
  std::uint64_t master = 0;
  std::uint64_t stream = 0;

  friend bool operator==(const RngSeed&, const RngSeed&) = default;
};

// Seed for trial `trial` of a run keyed by `master`. Injective in `trial`.
RngSeed derive_trial_seed(std::uint64_t master, std::uint64_t trial) noexcept;

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}
  std::uint64_t next() noexcept;

 private:
  std::uint64_t state_;
};

class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(RngSeed seed) noexcept;

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() noexcept { return next(); }

  std::uint64_t next() noexcept;
  double uniform01() noexcept;
  // Uniform on [0, bound); bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound) noexcept;
  bool bernoulli(double p) noexcept { return uniform01() < p; }

 private:
  std::uint64_t s_[4];
};

}  // namespace riglab
