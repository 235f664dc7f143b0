#ifndef HYPERPOT_CONFIGURATION_HPP
#define HYPERPOT_CONFIGURATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "hyperpot/geometry.hpp"

namespace hyperpot {

/// Marks are small integers.  The two-color models use +1/-1; a q-color gas
/// may use 0..q-1.
using Mark = int;

inline constexpr Mark kMarkPlus = +1;
inline constexpr Mark kMarkMinus = -1;

std::string mark_to_string(Mark m);
Mark mark_from_string(const std::string& s);

struct MarkedPoint {
  Point pos;
  Mark mark = kMarkPlus;

  bool operator==(const MarkedPoint& o) const {
    return mark == o.mark && pos == o.pos;
  }
};

/// Finite marked point configuration.  Carries the window it was defined on;
/// every point lies inside that window (checked on construction).  Points are
/// simple: coincident positions are rejected, matching the simple-process
/// setting everywhere else in the library.
class MarkedConfiguration {
public:
  MarkedConfiguration() = default;
  MarkedConfiguration(Window window, std::vector<MarkedPoint> points);

  int dim() const { return window_.dim(); }
  const Window& window() const { return window_; }
  const std::vector<MarkedPoint>& points() const { return points_; }
  int size() const { return static_cast<int>(points_.size()); }
  bool empty() const { return points_.empty(); }
  const MarkedPoint& operator[](int i) const {
    return points_[static_cast<std::size_t>(i)];
  }

  int count_mark(Mark m) const;
  int count_plus() const { return count_mark(kMarkPlus); }
  int count_minus() const { return count_mark(kMarkMinus); }
  /// Count of points inside the given region.
  int count_in(const Window& region) const;

  std::vector<Point> positions() const;

  /// Points inside `region`; the carried window stays the same.
  MarkedConfiguration restricted_to(const Window& region) const;
  MarkedConfiguration restricted_outside(const Window& region) const;
  /// Subset of points by index.
  MarkedConfiguration subset(const std::vector<int>& indices) const;

  /// Union of two configurations (point sets must be disjoint).  The carried
  /// window becomes a bounding box covering both.
  static MarkedConfiguration merged(const MarkedConfiguration& a,
                                    const MarkedConfiguration& b);

  MarkedConfiguration translated(const Point& z) const;

  /// Index of this exact marked point (position and mark bit-identical), or
  /// nullopt.
  std::optional<int> find(const MarkedPoint& p) const;

private:
  Window window_ = Window::box({0.0}, {1.0});
  std::vector<MarkedPoint> points_;
};

}  // namespace hyperpot

#endif  // HYPERPOT_CONFIGURATION_HPP
