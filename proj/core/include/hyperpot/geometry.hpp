#ifndef HYPERPOT_GEOMETRY_HPP
#define HYPERPOT_GEOMETRY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperpot/common.hpp"

namespace hyperpot {

/// A site in R^d.  Dimension is dynamic; all containers in the library carry
/// points of one common dimension and validate on entry.
struct Point {
  std::vector<double> x;

  Point() = default;
  explicit Point(std::vector<double> coords) : x(std::move(coords)) {}
  Point(std::initializer_list<double> coords) : x(coords) {}

  int dim() const { return static_cast<int>(x.size()); }
  double operator[](int i) const { return x[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return x[static_cast<std::size_t>(i)]; }

  bool operator==(const Point& o) const { return x == o.x; }
};

Point operator-(const Point& a, const Point& b);
Point operator+(const Point& a, const Point& b);

double norm2(const Point& p);          // Euclidean
double norm2_squared(const Point& p);
double norm_sup(const Point& p);       // max-norm
double dist2(const Point& a, const Point& b);
double dist_sup(const Point& a, const Point& b);

/// Volume of the d-dimensional Euclidean unit ball.
double unit_ball_volume(int dim);

/// Bounded observation window: an axis-aligned box or a ball.  Membership is
/// closed (boundary points belong to the window).
class Window {
public:
  enum class Kind { Box, Ball };

  static Window box(std::vector<double> lo, std::vector<double> hi);
  static Window ball(Point center, double radius);
  /// Axis box [-side/2, side/2]^d.
  static Window centered_box(int dim, double side);
  /// Centered ball of the given diameter.
  static Window centered_ball(int dim, double diameter);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  double volume() const;
  bool contains(const Point& p) const;
  /// Euclidean distance from p to the window (0 if inside).
  double distance_to(const Point& p) const;
  /// Distance from the window to the complement of an enclosing window
  /// (inf if other does not enclose this one).  Used for truncation moduli.
  double distance_to_complement(const Window& outer) const;
  bool encloses(const Window& inner) const;

  std::pair<std::vector<double>, std::vector<double>> bounding_box() const;
  /// Smallest box window containing this window, grown by pad on every side.
  Window padded_box(double pad) const;
  /// Window translated by the vector z.
  Window translated(const Point& z) const;

  const std::vector<double>& lo() const { return lo_; }
  const std::vector<double>& hi() const { return hi_; }
  const Point& center() const { return center_; }
  double radius() const { return radius_; }

private:
  Kind kind_ = Kind::Box;
  int dim_ = 0;
  std::vector<double> lo_, hi_;  // box form
  Point center_;                 // ball form
  double radius_ = 0.0;
};

/// B_delta(window): points at Euclidean distance < delta from the window.
/// The inequality is strict, so the region is open.
struct MollifiedRegion {
  Window base;
  double delta = 0.0;

  bool contains(const Point& p) const { return base.distance_to(p) < delta; }
};

MollifiedRegion mollify(const Window& window, double delta);

/// Partition of a finite point set into maximal components of the graph that
/// connects two points iff their Euclidean distance is strictly below 2r.
/// Points at distance exactly 2r are NOT connected.
struct ClusterDecomposition {
  double r = 0.0;
  std::vector<std::vector<int>> clusters;  // each sorted ascending; ordered by least member
  std::vector<int> label;                  // cluster id per input index
};

ClusterDecomposition cluster_decompose(const std::vector<Point>& points, double r);

/// Total order on sites with distinct coordinate vectors.
///
/// Cyclic: by distance to the origin, then by spherical angles, with a final
/// coordinatewise tie-break.  Lexicographic: coordinatewise; compatible with
/// translations.
struct Ordering {
  enum class Variant { Cyclic, Lexicographic };
  Variant variant = Variant::Lexicographic;

  static Ordering cyclic() { return Ordering{Variant::Cyclic}; }
  static Ordering lexicographic() { return Ordering{Variant::Lexicographic}; }

  /// Strict comparison; throws std::invalid_argument on coincident points.
  bool less(const Point& a, const Point& b) const;

  /// Norm used for the annulus geometry of this variant: Euclidean for the
  /// cyclic ordering, sup-norm for the lexicographic one.
  double annulus_norm(const Point& diff) const;
};

/// Nondecreasing, cofinal sequence of radii r_1 <= r_2 <= ... indexed from 1.
/// Beyond the stored prefix the sequence continues linearly so that cofinality
/// holds regardless of how the prefix was produced.
class RadiiSchedule {
public:
  static RadiiSchedule linear(double step);
  static RadiiSchedule from_radii(std::vector<double> radii);

  double radius(int m) const;  // m >= 1
  int stored_count() const { return static_cast<int>(radii_.size()); }

private:
  std::vector<double> radii_;
  double step_ = 1.0;
};

enum class AnnulusSide {
  GeqAtAnchor,  // x ranges over {y : y >= anchor}
  LtAtAnchor    // x ranges over {y : y < anchor}
};

/// Index m >= 1 of the annulus (w.r.t. the schedule) around `anchor` that
/// contains `p`: the smallest m with ||p - anchor|| <= r_m in the variant's
/// norm.  `side` states the order relation p must satisfy relative to the
/// anchor; a violation is an error.
int annulus_index(const Ordering& ord, const Point& anchor, const Point& p,
                  const RadiiSchedule& schedule, AnnulusSide side);

}  // namespace hyperpot

#endif  // HYPERPOT_GEOMETRY_HPP
