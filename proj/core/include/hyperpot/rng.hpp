#ifndef HYPERPOT_RNG_HPP
#define HYPERPOT_RNG_HPP

#include <cstdint>

namespace hyperpot {

/// Deterministic splittable generator.  A stream is identified by an explicit
/// 64-bit seed plus a stream id; the output sequence is a fixed function of
/// those two values on every platform (no library distributions involved).
/// The core is SplitMix64 on a counter, so substreams can be split off
/// without sharing state.
class RngStream {
public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on [a, b).
  double uniform(double a, double b);
  /// Bernoulli(p).
  bool bernoulli(double p);
  /// Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n);
  /// Standard normal (polar method).
  double normal();

  /// Poisson(mean).  Sequential inversion below mean 30, Hormann's PTRD
  /// transformed rejection above; callers see one deterministic stream.
  std::uint64_t poisson(double mean);

  /// Independent child stream; deterministic in (parent identity, tag).
  RngStream split(std::uint64_t tag) const;

private:
  std::uint64_t poisson_inversion(double mean);
  std::uint64_t poisson_ptrd(double mean);

  std::uint64_t state_;
  std::uint64_t base_;  // retained for split()
};

}  // namespace hyperpot

#endif  // HYPERPOT_RNG_HPP
