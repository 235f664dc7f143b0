#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "hyperpot/geometry.hpp"
#include "hyperpot/rng.hpp"
#include "test_helpers.hpp"

using namespace hyperpot;

TEST_SUITE("geometry") {

TEST_CASE("norms and point arithmetic") {
  Point a{3.0, 4.0};
  Point b{1.0, 1.0};
  CHECK(norm2(a) == doctest::Approx(5.0));
  CHECK(norm2_squared(a) == doctest::Approx(25.0));
  CHECK(norm_sup(a) == doctest::Approx(4.0));
  CHECK(dist2(a, b) == doctest::Approx(std::sqrt(4.0 + 9.0)));
  CHECK(dist_sup(a, b) == doctest::Approx(3.0));
  CHECK(((a - b) == Point{2.0, 3.0}));
  CHECK(((a + b) == Point{4.0, 5.0}));
}

TEST_CASE("unit ball volumes in low dimension") {
  CHECK(unit_ball_volume(1) == doctest::Approx(2.0));
  CHECK(unit_ball_volume(2) == doctest::Approx(std::numbers::pi));
  CHECK(unit_ball_volume(3) == doctest::Approx(4.0 / 3.0 * std::numbers::pi));
}

TEST_CASE("window membership is closed on the boundary") {
  const Window box = Window::box({0.0, 0.0}, {1.0, 2.0});
  CHECK(box.contains(Point{0.0, 0.0}));
  CHECK(box.contains(Point{1.0, 2.0}));
  CHECK(!box.contains(Point{1.0 + 1e-12, 1.0}));
  CHECK(box.volume() == doctest::Approx(2.0));

  const Window ball = Window::ball(Point{1.0, 1.0}, 0.5);
  CHECK(ball.contains(Point{1.5, 1.0}));
  CHECK(!ball.contains(Point{1.5 + 1e-12, 1.0}));
  CHECK(ball.volume() == doctest::Approx(std::numbers::pi * 0.25));

  const Window cb = Window::centered_box(3, 2.0);
  CHECK(cb.contains(Point{1.0, -1.0, 1.0}));
  CHECK(cb.volume() == doctest::Approx(8.0));
  const Window cball = Window::centered_ball(2, 3.0);
  CHECK(cball.radius() == doctest::Approx(1.5));
}

TEST_CASE("distances to and from windows") {
  const Window box = Window::box({0.0, 0.0}, {1.0, 1.0});
  CHECK(box.distance_to(Point{0.5, 0.5}) == 0.0);
  CHECK(box.distance_to(Point{2.0, 1.0}) == doctest::Approx(1.0));
  CHECK(box.distance_to(Point{2.0, 2.0}) == doctest::Approx(std::sqrt(2.0)));

  const Window outer = Window::box({-2.0, -2.0}, {3.0, 3.0});
  CHECK(box.distance_to_complement(outer) == doctest::Approx(2.0));
  CHECK(outer.encloses(box));
  CHECK(!box.encloses(outer));
  // non-enclosing outer: no protective gap
  CHECK(box.distance_to_complement(Window::box({0.5, 0.5}, {3.0, 3.0})) ==
        doctest::Approx(0.0));

  const Window ball = Window::ball(Point{0.0, 0.0}, 1.0);
  CHECK(ball.distance_to(Point{3.0, 0.0}) == doctest::Approx(2.0));
  CHECK(ball.distance_to_complement(Window::centered_box(2, 6.0)) ==
        doctest::Approx(2.0));
}

TEST_CASE("padded and translated windows") {
  const Window ball = Window::ball(Point{1.0, 0.0}, 1.0);
  const Window padded = ball.padded_box(0.5);
  CHECK(padded.kind() == Window::Kind::Box);
  CHECK(padded.lo()[0] == doctest::Approx(-0.5));
  CHECK(padded.hi()[0] == doctest::Approx(2.5));
  CHECK(padded.hi()[1] == doctest::Approx(1.5));

  const Window moved = ball.translated(Point{-1.0, 2.0});
  CHECK((moved.center() == Point{0.0, 2.0}));
  const Window boxmoved = Window::box({0.0}, {1.0}).translated(Point{0.25});
  CHECK(boxmoved.lo()[0] == doctest::Approx(0.25));
}

TEST_CASE("mollified region is open") {
  const MollifiedRegion region = mollify(Window::box({0.0, 0.0}, {1.0, 1.0}), 0.5);
  CHECK(region.contains(Point{1.4999999, 0.5}));
  CHECK(!region.contains(Point{1.5, 0.5}));  // distance exactly delta
  CHECK(region.contains(Point{0.5, 0.5}));
}

TEST_CASE("cluster decomposition matches a brute-force transitive closure") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    RngStream rng(seed, 77);
    const auto cfg = testutil::random_config(Window::centered_box(2, 4.0), 40, rng);
    const auto pts = cfg.positions();
    const double r = 0.35;

    const auto got = cluster_decompose(pts, r);
    auto expected = testutil::brute_clusters(pts, r);

    auto canon = got.clusters;
    std::sort(canon.begin(), canon.end());
    REQUIRE(canon == expected);

    // label[] must agree with the partition
    for (const auto& cl : got.clusters)
      for (int i : cl) CHECK(got.label[static_cast<std::size_t>(i)] ==
                             got.label[static_cast<std::size_t>(cl.front())]);
  }
}

TEST_CASE("distance exactly 2r does not connect") {
  const double r = 0.25;
  std::vector<Point> pts{{0.0, 0.0}, {0.5, 0.0}, {0.5 - 1e-9, 1.0}};
  auto d = cluster_decompose(pts, r);
  CHECK(d.clusters.size() == 3);  // 0.5 == 2r exactly: no edge

  pts[1] = Point{0.5 - 1e-9, 0.0};
  d = cluster_decompose(pts, r);
  CHECK(d.clusters.size() == 2);

  // cluster list is ordered by least member, members ascending
  CHECK(d.clusters.front().front() == 0);
}

TEST_CASE("orderings are strict total orders on distinct points") {
  for (const auto& ord : {Ordering::cyclic(), Ordering::lexicographic()}) {
    RngStream rng(3, 11);
    const auto cfg = testutil::random_config(Window::centered_box(2, 4.0), 18, rng);
    const auto pts = cfg.positions();
    const int n = static_cast<int>(pts.size());

    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const bool ij = ord.less(pts[static_cast<std::size_t>(i)],
                                 pts[static_cast<std::size_t>(j)]);
        const bool ji = ord.less(pts[static_cast<std::size_t>(j)],
                                 pts[static_cast<std::size_t>(i)]);
        CHECK(ij != ji);  // totality + antisymmetry
      }

    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          if (i == j || j == k || i == k) continue;
          const auto& a = pts[static_cast<std::size_t>(i)];
          const auto& b = pts[static_cast<std::size_t>(j)];
          const auto& c = pts[static_cast<std::size_t>(k)];
          if (ord.less(a, b) && ord.less(b, c)) CHECK(ord.less(a, c));
        }

    CHECK_THROWS_AS((void)ord.less(pts[0], pts[0]), std::invalid_argument);
  }
}

TEST_CASE("lexicographic order is translation compatible") {
  const Ordering ord = Ordering::lexicographic();
  RngStream rng(9, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto cfg =
        testutil::random_dyadic_config(Window::centered_box(3, 4.0), 2, 64, rng);
    if (cfg.size() < 2) continue;
    const Point a = cfg[0].pos;
    const Point b = cfg[1].pos;
    Point z{0.0, 0.0, 0.0};
    for (int i = 0; i < 3; ++i)
      z[i] = static_cast<double>(rng.uniform_index(129)) / 32.0 - 2.0;
    CHECK(ord.less(a, b) == ord.less(a + z, b + z));
  }
}

TEST_CASE("annulus norm matches the ordering variant") {
  const Point diff{3.0, -4.0};
  CHECK(Ordering::cyclic().annulus_norm(diff) == doctest::Approx(5.0));
  CHECK(Ordering::lexicographic().annulus_norm(diff) == doctest::Approx(4.0));
}

TEST_CASE("radii schedule stores a prefix and extends linearly") {
  const auto s = RadiiSchedule::from_radii({1.0, 2.0, 4.0});
  CHECK(s.stored_count() == 3);
  CHECK(s.radius(1) == doctest::Approx(1.0));
  CHECK(s.radius(3) == doctest::Approx(4.0));
  CHECK(s.radius(5) == doctest::Approx(4.0 + 2.0 * 2.0));  // last increment

  const auto lin = RadiiSchedule::linear(0.5);
  CHECK(lin.radius(4) == doctest::Approx(2.0));
  CHECK_THROWS_AS((void)lin.radius(0), std::invalid_argument);
  CHECK_THROWS_AS((void)RadiiSchedule::from_radii({2.0, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("annulus index agrees with a linear scan of the schedule") {
  const auto schedule = RadiiSchedule::from_radii({0.5, 0.8, 1.3, 2.1});
  for (const auto& ord : {Ordering::cyclic(), Ordering::lexicographic()}) {
    RngStream rng(21, 4);
    const Window w = Window::centered_box(2, 5.0);
    for (int trial = 0; trial < 300; ++trial) {
      auto cfg = testutil::random_config(w, 2, rng);
      Point anchor = cfg[0].pos;
      Point p = cfg[1].pos;
      if (ord.less(p, anchor)) std::swap(anchor, p);

      int expect = 1;
      const double d = ord.annulus_norm(p - anchor);
      while (d > schedule.radius(expect)) ++expect;

      CHECK(annulus_index(ord, anchor, p, schedule, AnnulusSide::GeqAtAnchor) ==
            expect);
      // the declared side must match the actual order relation
      CHECK_THROWS_AS((void)annulus_index(ord, anchor, p, schedule,
                                          AnnulusSide::LtAtAnchor),
                      std::invalid_argument);
      CHECK(annulus_index(ord, p, anchor, schedule, AnnulusSide::LtAtAnchor) ==
            expect);
    }
  }
}

}  // TEST_SUITE
