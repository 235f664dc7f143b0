#include "hyperpot/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hyperpot {

Point operator-(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("point dimension mismatch");
  Point r = a;
  for (int i = 0; i < a.dim(); ++i) r[i] -= b[i];
  return r;
}

Point operator+(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("point dimension mismatch");
  Point r = a;
  for (int i = 0; i < a.dim(); ++i) r[i] += b[i];
  return r;
}

double norm2_squared(const Point& p) {
  double s = 0.0;
  for (double c : p.x) s += c * c;
  return s;
}

double norm2(const Point& p) { return std::sqrt(norm2_squared(p)); }

double norm_sup(const Point& p) {
  double s = 0.0;
  for (double c : p.x) s = std::max(s, std::abs(c));
  return s;
}

double dist2(const Point& a, const Point& b) { return norm2(a - b); }

double dist_sup(const Point& a, const Point& b) { return norm_sup(a - b); }

double unit_ball_volume(int dim) {
  if (dim <= 0) throw std::invalid_argument("dimension must be positive");
  // V_d = pi^(d/2) / Gamma(d/2 + 1)
  return std::pow(M_PI, 0.5 * dim) / std::tgamma(0.5 * dim + 1.0);
}

Window Window::box(std::vector<double> lo, std::vector<double> hi) {
  if (lo.empty() || lo.size() != hi.size())
    throw std::invalid_argument("box window needs matching nonempty lo/hi");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (!(lo[i] <= hi[i])) throw std::invalid_argument("box window has lo > hi");
  Window w;
  w.kind_ = Kind::Box;
  w.dim_ = static_cast<int>(lo.size());
  w.lo_ = std::move(lo);
  w.hi_ = std::move(hi);
  return w;
}

Window Window::ball(Point center, double radius) {
  if (center.dim() == 0) throw std::invalid_argument("ball window needs a center");
  if (radius < 0.0) throw std::invalid_argument("ball window needs radius >= 0");
  Window w;
  w.kind_ = Kind::Ball;
  w.dim_ = center.dim();
  w.center_ = std::move(center);
  w.radius_ = radius;
  return w;
}

Window Window::centered_box(int dim, double side) {
  std::vector<double> lo(dim, -0.5 * side), hi(dim, 0.5 * side);
  return box(std::move(lo), std::move(hi));
}

Window Window::centered_ball(int dim, double diameter) {
  Point c;
  c.x.assign(static_cast<std::size_t>(dim), 0.0);
  return ball(std::move(c), 0.5 * diameter);
}

double Window::volume() const {
  if (kind_ == Kind::Box) {
    double v = 1.0;
    for (int i = 0; i < dim_; ++i) v *= (hi_[i] - lo_[i]);
    return v;
  }
  return unit_ball_volume(dim_) * std::pow(radius_, dim_);
}

bool Window::contains(const Point& p) const {
  if (p.dim() != dim_) throw std::invalid_argument("point/window dimension mismatch");
  if (kind_ == Kind::Box) {
    for (int i = 0; i < dim_; ++i)
      if (p[i] < lo_[i] || p[i] > hi_[i]) return false;
    return true;
  }
  return dist2(p, center_) <= radius_;
}

double Window::distance_to(const Point& p) const {
  if (p.dim() != dim_) throw std::invalid_argument("point/window dimension mismatch");
  if (kind_ == Kind::Box) {
    double s = 0.0;
    for (int i = 0; i < dim_; ++i) {
      double d = 0.0;
      if (p[i] < lo_[i]) d = lo_[i] - p[i];
      else if (p[i] > hi_[i]) d = p[i] - hi_[i];
      s += d * d;
    }
    return std::sqrt(s);
  }
  return std::max(0.0, dist2(p, center_) - radius_);
}

double Window::distance_to_complement(const Window& outer) const {
  if (!outer.encloses(*this)) return 0.0;
  if (outer.kind_ == Kind::Box) {
    // distance from this window to the nearest face of the outer box
    auto [lo, hi] = bounding_box();
    double d = kInf;
    for (int i = 0; i < dim_; ++i) {
      d = std::min(d, lo[i] - outer.lo_[i]);
      d = std::min(d, outer.hi_[i] - hi[i]);
    }
    return std::max(0.0, d);
  }
  // outer ball: distance from the farthest point of this window to the sphere
  if (kind_ == Kind::Ball) {
    return std::max(0.0, outer.radius_ - dist2(center_, outer.center_) - radius_);
  }
  double far = 0.0;
  // farthest box corner from the outer center
  for (int i = 0; i < dim_; ++i) {
    double a = std::abs(lo_[i] - outer.center_[i]);
    double b = std::abs(hi_[i] - outer.center_[i]);
    double m = std::max(a, b);
    far += m * m;
  }
  return std::max(0.0, outer.radius_ - std::sqrt(far));
}

bool Window::encloses(const Window& inner) const {
  if (inner.dim_ != dim_) return false;
  if (kind_ == Kind::Box) {
    auto [lo, hi] = inner.bounding_box();
    for (int i = 0; i < dim_; ++i)
      if (lo[i] < lo_[i] || hi[i] > hi_[i]) return false;
    return true;
  }
  if (inner.kind_ == Kind::Ball) {
    return dist2(inner.center_, center_) + inner.radius_ <= radius_;
  }
  // every corner of the inner box must lie in the ball; check the farthest one
  double far = 0.0;
  for (int i = 0; i < dim_; ++i) {
    double a = std::abs(inner.lo_[i] - center_[i]);
    double b = std::abs(inner.hi_[i] - center_[i]);
    double m = std::max(a, b);
    far += m * m;
  }
  return std::sqrt(far) <= radius_;
}

std::pair<std::vector<double>, std::vector<double>> Window::bounding_box() const {
  if (kind_ == Kind::Box) return {lo_, hi_};
  std::vector<double> lo(dim_), hi(dim_);
  for (int i = 0; i < dim_; ++i) {
    lo[i] = center_[i] - radius_;
    hi[i] = center_[i] + radius_;
  }
  return {lo, hi};
}

Window Window::padded_box(double pad) const {
  auto [lo, hi] = bounding_box();
  for (int i = 0; i < dim_; ++i) {
    lo[i] -= pad;
    hi[i] += pad;
  }
  return box(std::move(lo), std::move(hi));
}

Window Window::translated(const Point& z) const {
  if (z.dim() != dim_) throw std::invalid_argument("shift dimension mismatch");
  if (kind_ == Kind::Box) {
    std::vector<double> lo = lo_, hi = hi_;
    for (int i = 0; i < dim_; ++i) {
      lo[i] += z[i];
      hi[i] += z[i];
    }
    return box(std::move(lo), std::move(hi));
  }
  return ball(center_ + z, radius_);
}

MollifiedRegion mollify(const Window& window, double delta) {
  if (delta <= 0.0) throw std::invalid_argument("mollification needs delta > 0");
  return MollifiedRegion{window, delta};
}

namespace {

struct UnionFind {
  std::vector<int> parent, rank_;
  explicit UnionFind(int n) : parent(n), rank_(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }
};

}  // namespace

ClusterDecomposition cluster_decompose(const std::vector<Point>& points, double r) {
  if (r < 0.0) throw std::invalid_argument("cluster radius must be >= 0");
  const int n = static_cast<int>(points.size());
  UnionFind uf(n);
  const double thresh = 2.0 * r;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // strict inequality: distance exactly 2r does not connect
      if (dist2(points[i], points[j]) < thresh) uf.merge(i, j);
    }
  }
  ClusterDecomposition out;
  out.r = r;
  out.label.assign(n, -1);
  std::vector<int> root_to_cluster(n, -1);
  for (int i = 0; i < n; ++i) {
    int root = uf.find(i);
    if (root_to_cluster[root] < 0) {
      root_to_cluster[root] = static_cast<int>(out.clusters.size());
      out.clusters.emplace_back();
    }
    int cid = root_to_cluster[root];
    out.label[i] = cid;
    out.clusters[cid].push_back(i);  // ascending since i is increasing
  }
  return out;
}

namespace {

// Spherical angle sequence of p, used only to break norm ties in the cyclic
// order.  Ties inside the sequence fall through to the coordinate tie-break.
std::vector<double> angles_of(const Point& p) {
  const int d = p.dim();
  std::vector<double> ang;
  if (d < 2) return ang;
  ang.reserve(static_cast<std::size_t>(d - 1));
  for (int k = 0; k + 2 < d; ++k) {
    double tail = 0.0;
    for (int j = k; j < d; ++j) tail += p[j] * p[j];
    if (tail <= 0.0) {
      ang.push_back(0.0);
      continue;
    }
    double c = p[k] / std::sqrt(tail);
    c = std::clamp(c, -1.0, 1.0);
    ang.push_back(std::acos(c));
  }
  double az = std::atan2(p[d - 1], p[d - 2]);
  if (az < 0.0) az += 2.0 * M_PI;
  ang.push_back(az);
  return ang;
}

}  // namespace

bool Ordering::less(const Point& a, const Point& b) const {
  if (a.dim() != b.dim()) throw std::invalid_argument("ordering: dimension mismatch");
  if (a == b)
    throw std::invalid_argument("ordering: points coincide; order undefined");
  if (variant == Variant::Lexicographic) {
    return std::lexicographical_compare(a.x.begin(), a.x.end(), b.x.begin(), b.x.end());
  }
  const double na = norm2_squared(a), nb = norm2_squared(b);
  if (na != nb) return na < nb;
  const auto aa = angles_of(a), ab = angles_of(b);
  for (std::size_t i = 0; i < aa.size(); ++i) {
    if (aa[i] != ab[i]) return aa[i] < ab[i];
  }
  return std::lexicographical_compare(a.x.begin(), a.x.end(), b.x.begin(), b.x.end());
}

double Ordering::annulus_norm(const Point& diff) const {
  return variant == Variant::Cyclic ? norm2(diff) : norm_sup(diff);
}

RadiiSchedule RadiiSchedule::linear(double step) {
  if (step <= 0.0) throw std::invalid_argument("schedule step must be > 0");
  RadiiSchedule s;
  s.step_ = step;
  return s;
}

RadiiSchedule RadiiSchedule::from_radii(std::vector<double> radii) {
  if (radii.empty()) throw std::invalid_argument("schedule needs at least one radius");
  if (radii.front() <= 0.0) throw std::invalid_argument("schedule radii must be > 0");
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (radii[i] < radii[i - 1])
      throw std::invalid_argument("schedule radii must be nondecreasing");
  RadiiSchedule s;
  // continue linearly past the prefix; at least unit steps keep it cofinal
  s.step_ = 1.0;
  if (radii.size() >= 2)
    s.step_ = std::max(1.0, radii.back() - radii[radii.size() - 2]);
  s.radii_ = std::move(radii);
  return s;
}

double RadiiSchedule::radius(int m) const {
  if (m < 1) throw std::invalid_argument("schedule index starts at 1");
  const int n = static_cast<int>(radii_.size());
  if (m <= n) return radii_[static_cast<std::size_t>(m - 1)];
  const double base = n > 0 ? radii_.back() : 0.0;
  return base + step_ * (m - n);
}

int annulus_index(const Ordering& ord, const Point& anchor, const Point& p,
                  const RadiiSchedule& schedule, AnnulusSide side) {
  const bool p_less = ord.less(p, anchor);  // throws if p == anchor
  if (side == AnnulusSide::GeqAtAnchor && p_less)
    throw std::invalid_argument("annulus_index: point is below the anchor");
  if (side == AnnulusSide::LtAtAnchor && !p_less)
    throw std::invalid_argument("annulus_index: point is not below the anchor");
  const double d = ord.annulus_norm(p - anchor);
  int m = 1;
  while (d > schedule.radius(m)) {
    ++m;
    if (m > 100000000) throw std::logic_error("annulus_index: schedule not cofinal");
  }
  return m;
}

}  // namespace hyperpot
