#ifndef HYPERPOT_SAMPLING_HPP
#define HYPERPOT_SAMPLING_HPP

#include <array>
#include <cstdint>

#include "hyperpot/configuration.hpp"
#include "hyperpot/rng.hpp"

namespace hyperpot {

/// Per-mark intensities of a two-color homogeneous Poisson process.
struct IntensitySpec {
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;

  double total() const { return lambda_plus + lambda_minus; }
  void validate() const;
};

/// Symmetric independent spin-flip dynamics run for time t >= 0.  t may be
/// +infinity (stationary limit).
struct SpinFlipParams {
  double t = 0.0;

  void validate() const;
  bool infinite() const;
};

/// 2x2 transition matrix of the spin-flip dynamics at time t, indexed
/// [from][to] with 0 = plus, 1 = minus.  p(same) = (1+e^{-2t})/2.
std::array<std::array<double, 2>, 2> transition_matrix(const SpinFlipParams& p);

/// Draw a two-color Poisson configuration on the window.  Counts are Poisson
/// with mean lambda * volume per mark; positions are uniform (rejection from
/// the bounding box for ball windows).  Deterministic in the seed.
MarkedConfiguration sample_marked_ppp(const Window& window,
                                      const IntensitySpec& intensities,
                                      std::uint64_t seed);

MarkedConfiguration sample_marked_ppp(const Window& window,
                                      const IntensitySpec& intensities,
                                      RngStream& rng);

/// Flip each mark independently per the transition matrix; positions are
/// kept.  Deterministic in the seed.
MarkedConfiguration time_evolve_marks(const MarkedConfiguration& config,
                                      const SpinFlipParams& p,
                                      std::uint64_t seed);

/// Single-time marginal intensities of the evolved process.  The sum equals
/// lambda_plus + lambda_minus up to roundoff (mass conservation).
IntensitySpec evolved_intensities(const IntensitySpec& initial,
                                  const SpinFlipParams& p);

}  // namespace hyperpot

#endif  // HYPERPOT_SAMPLING_HPP
