#include "hyperpot/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperpot {

namespace {

inline std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a ^ (b * 0xda942042e4dd58b5ULL + 0x2545f4914f6cdd1dULL);
  return splitmix64(s);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) {
  base_ = mix(seed, stream);
  state_ = base_;
}

std::uint64_t RngStream::next_u64() { return splitmix64(state_); }

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double a, double b) { return a + (b - a) * uniform(); }

bool RngStream::bernoulli(double p) { return uniform() < p; }

std::uint64_t RngStream::uniform_index(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_index needs n > 0");
  // rejection to kill modulo bias
  const std::uint64_t limit = n * (UINT64_MAX / n);
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % n;
}

double RngStream::normal() {
  // polar Marsaglia; deterministic consumption order
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  return u * std::sqrt(-2.0 * std::log(s) / s);
}

std::uint64_t RngStream::poisson(double mean) {
  if (mean < 0.0 || !std::isfinite(mean))
    throw std::invalid_argument("poisson mean must be finite and >= 0");
  if (mean == 0.0) return 0;
  if (mean < 30.0) return poisson_inversion(mean);
  return poisson_ptrd(mean);
}

std::uint64_t RngStream::poisson_inversion(double mean) {
  // CDF search; fine for small means
  const double u = uniform();
  double p = std::exp(-mean);
  double cdf = p;
  std::uint64_t k = 0;
  while (u > cdf && k < 2000) {
    ++k;
    p *= mean / static_cast<double>(k);
    cdf += p;
  }
  return k;
}

std::uint64_t RngStream::poisson_ptrd(double mean) {
  // Hormann (1993), "The transformed rejection method for generating Poisson
  // random variables", algorithm PTRD; valid for mean >= 10.
  const double smu = std::sqrt(mean);
  const double b = 0.931 + 2.53 * smu;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);

  for (;;) {
    double U = uniform() - 0.5;
    double V = uniform();
    double us = 0.5 - std::abs(U);
    double kf = std::floor((2.0 * a / us + b) * U + mean + 0.43);
    if (us >= 0.07 && V <= v_r) return static_cast<std::uint64_t>(kf);
    if (kf < 0.0 || (us < 0.013 && V > us)) continue;
    double k = kf;
    double lhs = std::log(V * inv_alpha / (a / (us * us) + b));
    double rhs = k * std::log(mean) - mean - std::lgamma(k + 1.0);
    if (lhs <= rhs) return static_cast<std::uint64_t>(kf);
  }
}

RngStream RngStream::split(std::uint64_t tag) const {
  RngStream child(base_, tag ^ 0xa02bdbf7bb3c0a7ULL);
  return child;
}

}  // namespace hyperpot
