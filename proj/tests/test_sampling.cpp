#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "hyperpot/sampling.hpp"

using namespace hyperpot;

TEST_SUITE("sampling") {

TEST_CASE("parameter validation") {
  const IntensitySpec bad{-1.0, 0.5};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  const IntensitySpec zero{0.0, 0.0};
  CHECK_NOTHROW(zero.validate());
  const IntensitySpec two{1.5, 0.5};
  CHECK(two.total() == doctest::Approx(2.0));

  const SpinFlipParams negative{-0.1};
  CHECK_THROWS_AS(negative.validate(), std::invalid_argument);
  CHECK_NOTHROW(SpinFlipParams{0.0}.validate());
  const SpinFlipParams inf_t{std::numeric_limits<double>::infinity()};
  CHECK_NOTHROW(inf_t.validate());
  CHECK(inf_t.infinite());
}

TEST_CASE("transition matrix rows are distributions") {
  for (double t : {0.0, 0.1, 0.7, 3.0}) {
    const auto m = transition_matrix(SpinFlipParams{t});
    for (int i = 0; i < 2; ++i) {
      CHECK(m[i][0] + m[i][1] == doctest::Approx(1.0));
      CHECK(m[i][0] >= 0.0);
      CHECK(m[i][1] >= 0.0);
    }
    // diagonal (1+e^{-2t})/2, symmetric dynamics
    const double same = 0.5 * (1.0 + std::exp(-2.0 * t));
    CHECK(m[0][0] == doctest::Approx(same));
    CHECK(m[1][1] == doctest::Approx(same));
    CHECK(m[0][1] == doctest::Approx(m[1][0]));
  }

  const auto id = transition_matrix(SpinFlipParams{0.0});
  CHECK(id[0][0] == doctest::Approx(1.0));
  CHECK(id[0][1] == doctest::Approx(0.0));

  const auto stat =
      transition_matrix(SpinFlipParams{std::numeric_limits<double>::infinity()});
  CHECK(stat[0][0] == doctest::Approx(0.5));
  CHECK(stat[1][0] == doctest::Approx(0.5));
}

TEST_CASE("evolved intensities conserve total mass") {
  const IntensitySpec initial{2.0, 0.5};
  for (double t : {0.0, 0.3, 1.0, 10.0}) {
    const auto ev = evolved_intensities(initial, SpinFlipParams{t});
    CHECK(ev.total() == doctest::Approx(initial.total()).epsilon(1e-14));
    CHECK(ev.lambda_plus >= 0.0);
    CHECK(ev.lambda_minus >= 0.0);
  }

  const auto at0 = evolved_intensities(initial, SpinFlipParams{0.0});
  CHECK(at0.lambda_plus == doctest::Approx(2.0));
  const auto stationary = evolved_intensities(
      initial, SpinFlipParams{std::numeric_limits<double>::infinity()});
  CHECK(stationary.lambda_plus == doctest::Approx(1.25));
  CHECK(stationary.lambda_minus == doctest::Approx(1.25));
}

TEST_CASE("poisson sampler: counts, support, determinism") {
  const Window w = Window::box({0.0, 0.0}, {3.0, 3.0});
  const IntensitySpec lam{1.2, 0.8};

  double plus_sum = 0.0, minus_sum = 0.0;
  const int reps = 300;
  for (int rep = 0; rep < reps; ++rep) {
    const auto cfg = sample_marked_ppp(w, lam, 1000 + rep);
    plus_sum += cfg.count_plus();
    minus_sum += cfg.count_minus();
    for (int i = 0; i < cfg.size(); ++i) CHECK(w.contains(cfg[i].pos));
  }
  const double vol = 9.0;
  CHECK(std::abs(plus_sum / reps - lam.lambda_plus * vol) <
        4.0 * std::sqrt(lam.lambda_plus * vol / reps));
  CHECK(std::abs(minus_sum / reps - lam.lambda_minus * vol) <
        4.0 * std::sqrt(lam.lambda_minus * vol / reps));

  const auto c1 = sample_marked_ppp(w, lam, 77);
  const auto c2 = sample_marked_ppp(w, lam, 77);
  REQUIRE(c1.size() == c2.size());
  for (int i = 0; i < c1.size(); ++i) CHECK(c1[i] == c2[i]);
}

TEST_CASE("poisson sampler on a ball window") {
  const Window ball = Window::ball(Point{1.0, -1.0}, 2.0);
  double count = 0.0;
  const int reps = 200;
  for (int rep = 0; rep < reps; ++rep) {
    const auto cfg = sample_marked_ppp(ball, IntensitySpec{1.0, 0.0}, 50 + rep);
    count += cfg.size();
    for (int i = 0; i < cfg.size(); ++i) CHECK(ball.contains(cfg[i].pos));
  }
  const double mean = ball.volume();  // ~12.57
  CHECK(std::abs(count / reps - mean) < 4.0 * std::sqrt(mean / reps));
}

TEST_CASE("mark evolution keeps positions and flips at the right rate") {
  const Window w = Window::box({0.0, 0.0}, {4.0, 4.0});
  const SpinFlipParams dyn{0.5};
  const double p_flip = 0.5 * (1.0 - std::exp(-1.0));  // (1 - e^{-2t})/2

  int flips = 0, total = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const auto before = sample_marked_ppp(w, IntensitySpec{5.0, 0.0}, 900 + rep);
    const auto after = time_evolve_marks(before, dyn, 300 + rep);
    REQUIRE(after.size() == before.size());
    for (int i = 0; i < before.size(); ++i) {
      CHECK(after[i].pos == before[i].pos);
      flips += after[i].mark != before[i].mark ? 1 : 0;
      ++total;
    }
  }
  REQUIRE(total > 2000);
  const double freq = static_cast<double>(flips) / total;
  CHECK(std::abs(freq - p_flip) <
        4.0 * std::sqrt(p_flip * (1.0 - p_flip) / total));

  // t = 0 never flips
  const auto before = sample_marked_ppp(w, IntensitySpec{2.0, 2.0}, 5);
  const auto frozen = time_evolve_marks(before, SpinFlipParams{0.0}, 9);
  for (int i = 0; i < before.size(); ++i) CHECK(frozen[i] == before[i]);
}

}  // TEST_SUITE
