#include "hyperpot/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "hyperpot/common.hpp"

namespace hyperpot {

void IntensitySpec::validate() const {
  if (!(lambda_plus >= 0.0) || !(lambda_minus >= 0.0) ||
      !std::isfinite(lambda_plus) || !std::isfinite(lambda_minus))
    throw std::invalid_argument("intensities must be finite and >= 0");
}

void SpinFlipParams::validate() const {
  if (std::isnan(t) || t < 0.0)
    throw std::invalid_argument("spin-flip time must be >= 0 (or +inf)");
}

bool SpinFlipParams::infinite() const { return std::isinf(t); }

std::array<std::array<double, 2>, 2> transition_matrix(const SpinFlipParams& p) {
  p.validate();
  const double u = p.infinite() ? 0.0 : std::exp(-2.0 * p.t);
  const double same = 0.5 * (1.0 + u);
  const double flip = 0.5 * (1.0 - u);
  return {{{same, flip}, {flip, same}}};
}

namespace {

Point sample_position(const Window& window, RngStream& rng) {
  auto [lo, hi] = window.bounding_box();
  const int d = window.dim();
  Point p;
  p.x.resize(static_cast<std::size_t>(d));
  for (;;) {
    for (int i = 0; i < d; ++i)
      p[i] = rng.uniform(lo[static_cast<std::size_t>(i)],
                         hi[static_cast<std::size_t>(i)]);
    if (window.kind() == Window::Kind::Box || window.contains(p)) return p;
  }
}

}  // namespace

MarkedConfiguration sample_marked_ppp(const Window& window,
                                      const IntensitySpec& intensities,
                                      RngStream& rng) {
  intensities.validate();
  const double vol = window.volume();
  std::vector<MarkedPoint> pts;
  const std::uint64_t n_plus = rng.poisson(intensities.lambda_plus * vol);
  const std::uint64_t n_minus = rng.poisson(intensities.lambda_minus * vol);
  pts.reserve(n_plus + n_minus);
  for (std::uint64_t i = 0; i < n_plus; ++i)
    pts.push_back({sample_position(window, rng), kMarkPlus});
  for (std::uint64_t i = 0; i < n_minus; ++i)
    pts.push_back({sample_position(window, rng), kMarkMinus});
  return MarkedConfiguration(window, std::move(pts));
}

MarkedConfiguration sample_marked_ppp(const Window& window,
                                      const IntensitySpec& intensities,
                                      std::uint64_t seed) {
  RngStream rng(seed);
  return sample_marked_ppp(window, intensities, rng);
}

MarkedConfiguration time_evolve_marks(const MarkedConfiguration& config,
                                      const SpinFlipParams& p,
                                      std::uint64_t seed) {
  const auto tm = transition_matrix(p);
  RngStream rng(seed, 0x7e01);
  std::vector<MarkedPoint> pts = config.points();
  for (auto& mp : pts) {
    if (mp.mark != kMarkPlus && mp.mark != kMarkMinus)
      throw std::invalid_argument("spin flip needs +/- marks");
    const int row = mp.mark == kMarkPlus ? 0 : 1;
    const double stay = tm[static_cast<std::size_t>(row)][static_cast<std::size_t>(row)];
    if (!rng.bernoulli(stay)) mp.mark = -mp.mark;
  }
  return MarkedConfiguration(config.window(), std::move(pts));
}

IntensitySpec evolved_intensities(const IntensitySpec& initial,
                                  const SpinFlipParams& p) {
  initial.validate();
  const auto tm = transition_matrix(p);
  IntensitySpec out;
  out.lambda_plus = initial.lambda_plus * tm[0][0] + initial.lambda_minus * tm[1][0];
  out.lambda_minus = initial.lambda_plus * tm[0][1] + initial.lambda_minus * tm[1][1];
  return out;
}

}  // namespace hyperpot
