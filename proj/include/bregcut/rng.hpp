#pragma once

#include <cstddef>
#include <cstdint>

namespace bregcut {

/// Quantile function of the standard normal distribution (Wichura's
/// double-precision rational approximation, accurate to ~1e-16 relative).
/// Requires p in (0, 1).
double inverse_normal_cdf(double p);

/// Deterministic counter-based generator: draw i is the SplitMix64 finalizer
/// applied to seed + (i+1) * 0x9e3779b97f4a7c15. Identical seeds reproduce
/// identical streams on every platform, which keeps generated problem
/// instances bit-exact. Normal variates go through the inverse CDF rather
/// than any library distribution for the same reason.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();
  /// Uniform on (0, 1); safe to feed the inverse CDF.
  double uniform_open01();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);
  /// Standard normal via inverse-CDF sampling.
  double normal();
  /// Uniform integer in [0, n).
  std::size_t uniform_index(std::size_t n);

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace bregcut
