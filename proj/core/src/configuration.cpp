#include "hyperpot/configuration.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperpot {

std::string mark_to_string(Mark m) {
  if (m == kMarkPlus) return "+";
  if (m == kMarkMinus) return "-";
  return std::to_string(m);
}

Mark mark_from_string(const std::string& s) {
  if (s == "+") return kMarkPlus;
  if (s == "-") return kMarkMinus;
  try {
    return std::stoi(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("unrecognized mark: " + s);
  }
}

MarkedConfiguration::MarkedConfiguration(Window window,
                                         std::vector<MarkedPoint> points)
    : window_(std::move(window)), points_(std::move(points)) {
  for (const auto& p : points_) {
    if (p.pos.dim() != window_.dim())
      throw std::invalid_argument("configuration point dimension mismatch");
    if (!window_.contains(p.pos))
      throw std::invalid_argument("configuration point outside its window");
  }
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = i + 1; j < points_.size(); ++j)
      if (points_[i].pos == points_[j].pos)
        throw std::invalid_argument("configuration has coincident points");
}

int MarkedConfiguration::count_mark(Mark m) const {
  int n = 0;
  for (const auto& p : points_)
    if (p.mark == m) ++n;
  return n;
}

int MarkedConfiguration::count_in(const Window& region) const {
  int n = 0;
  for (const auto& p : points_)
    if (region.contains(p.pos)) ++n;
  return n;
}

std::vector<Point> MarkedConfiguration::positions() const {
  std::vector<Point> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p.pos);
  return out;
}

MarkedConfiguration MarkedConfiguration::restricted_to(const Window& region) const {
  std::vector<MarkedPoint> kept;
  for (const auto& p : points_)
    if (region.contains(p.pos)) kept.push_back(p);
  return MarkedConfiguration(window_, std::move(kept));
}

MarkedConfiguration MarkedConfiguration::restricted_outside(const Window& region) const {
  std::vector<MarkedPoint> kept;
  for (const auto& p : points_)
    if (!region.contains(p.pos)) kept.push_back(p);
  return MarkedConfiguration(window_, std::move(kept));
}

MarkedConfiguration MarkedConfiguration::subset(const std::vector<int>& indices) const {
  std::vector<MarkedPoint> kept;
  kept.reserve(indices.size());
  for (int i : indices) {
    if (i < 0 || i >= size()) throw std::out_of_range("configuration subset index");
    kept.push_back(points_[static_cast<std::size_t>(i)]);
  }
  return MarkedConfiguration(window_, std::move(kept));
}

MarkedConfiguration MarkedConfiguration::merged(const MarkedConfiguration& a,
                                                const MarkedConfiguration& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("merged configurations must share a dimension");
  auto [alo, ahi] = a.window().bounding_box();
  auto [blo, bhi] = b.window().bounding_box();
  for (int i = 0; i < a.dim(); ++i) {
    alo[static_cast<std::size_t>(i)] =
        std::min(alo[static_cast<std::size_t>(i)], blo[static_cast<std::size_t>(i)]);
    ahi[static_cast<std::size_t>(i)] =
        std::max(ahi[static_cast<std::size_t>(i)], bhi[static_cast<std::size_t>(i)]);
  }
  std::vector<MarkedPoint> pts = a.points_;
  pts.insert(pts.end(), b.points_.begin(), b.points_.end());
  return MarkedConfiguration(Window::box(std::move(alo), std::move(ahi)),
                             std::move(pts));
}

MarkedConfiguration MarkedConfiguration::translated(const Point& z) const {
  std::vector<MarkedPoint> pts = points_;
  for (auto& p : pts) p.pos = p.pos + z;
  return MarkedConfiguration(window_.translated(z), std::move(pts));
}

std::optional<int> MarkedConfiguration::find(const MarkedPoint& p) const {
  for (int i = 0; i < size(); ++i)
    if (points_[static_cast<std::size_t>(i)] == p) return i;
  return std::nullopt;
}

}  // namespace hyperpot
