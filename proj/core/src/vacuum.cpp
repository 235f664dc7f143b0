#include "hyperpot/vacuum.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "hyperpot/common.hpp"
#include "hyperpot/rng.hpp"

namespace hyperpot {

namespace {

Window enclosing_window(const std::vector<MarkedPoint>& pts, double pad) {
  const int d = pts.front().pos.dim();
  std::vector<double> lo(static_cast<std::size_t>(d), kInf);
  std::vector<double> hi(static_cast<std::size_t>(d), -kInf);
  for (const auto& mp : pts) {
    for (int i = 0; i < d; ++i) {
      lo[static_cast<std::size_t>(i)] = std::min(lo[static_cast<std::size_t>(i)], mp.pos[i]);
      hi[static_cast<std::size_t>(i)] = std::max(hi[static_cast<std::size_t>(i)], mp.pos[i]);
    }
  }
  for (int i = 0; i < d; ++i) {
    lo[static_cast<std::size_t>(i)] -= pad;
    hi[static_cast<std::size_t>(i)] += pad;
  }
  return Window::box(std::move(lo), std::move(hi));
}

std::vector<int> sorted_order(const std::vector<MarkedPoint>& pts) {
  std::vector<int> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& pa = pts[static_cast<std::size_t>(a)];
    const auto& pb = pts[static_cast<std::size_t>(b)];
    if (pa.pos.x != pb.pos.x) return pa.pos.x < pb.pos.x;
    return pa.mark < pb.mark;
  });
  return order;
}

std::string cache_key(const std::vector<MarkedPoint>& pts,
                      const std::vector<bool>& present) {
  const auto order = sorted_order(pts);
  std::string key;
  key.reserve(pts.size() * 24);
  for (int idx : order) {
    const auto& mp = pts[static_cast<std::size_t>(idx)];
    for (double c : mp.pos.x) {
      char buf[sizeof(double)];
      std::memcpy(buf, &c, sizeof(double));
      key.append(buf, sizeof(double));
    }
    key.push_back(static_cast<char>(mp.mark & 0xff));
    key.push_back(present[static_cast<std::size_t>(idx)] ? '\1' : '\0');
  }
  return key;
}

}  // namespace

VacuumPotential::VacuumPotential(std::shared_ptr<const PreModification> rho,
                                 VacuumOptions opts)
    : rho_(std::move(rho)), opts_(opts) {
  if (!rho_) throw std::invalid_argument("vacuum potential needs a weight family");
  if (opts_.max_edge < 1 || opts_.max_edge > 30)
    throw std::invalid_argument("vacuum max_edge must be in [1, 30]");
}

double VacuumPotential::phi(const MarkedConfiguration& eta) const {
  return phi(eta, eta);
}

double VacuumPotential::phi(const MarkedConfiguration& eta,
                            const MarkedConfiguration& omega) const {
  if (eta.empty()) return 0.0;
  const auto& pts = eta.points();
  std::vector<bool> present(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    present[i] = omega.find(pts[i]).has_value();

  std::string key;
  if (opts_.use_cache) {
    key = cache_key(pts, present);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }

  const Window lambda = enclosing_window(pts, 1.0);
  double value = phi_impl(pts, present, lambda);

  if (opts_.check_volume_independence) {
    const Window bigger = enclosing_window(pts, 3.7);
    const double other = phi_impl(pts, present, bigger);
    if (!close_abs(value, other, opts_.volume_independence_tol))
      throw ModelError("hyperedge value depends on the enclosing volume");
  }

  if (opts_.use_cache) {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    cache_.emplace(std::move(key), value);
  }
  return value;
}

double VacuumPotential::phi_at_window(const MarkedConfiguration& eta,
                                      const MarkedConfiguration& omega,
                                      const Window& lambda) const {
  if (eta.empty()) return 0.0;
  const auto& pts = eta.points();
  for (const auto& mp : pts)
    if (!lambda.contains(mp.pos))
      throw std::invalid_argument("volume does not contain the hyperedge");
  std::vector<bool> present(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    present[i] = omega.find(pts[i]).has_value();
  return phi_impl(pts, present, lambda);
}

double VacuumPotential::phi_impl(const std::vector<MarkedPoint>& eta,
                                 const std::vector<bool>& present,
                                 const Window& lambda) const {
  const int n = static_cast<int>(eta.size());
  if (n > opts_.max_edge)
    throw std::invalid_argument("hyperedge exceeds the configured size cap");

  auto config_for = [&](std::uint32_t mask) {
    std::vector<MarkedPoint> sub;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u && present[static_cast<std::size_t>(i)])
        sub.push_back(eta[static_cast<std::size_t>(i)]);
    return MarkedConfiguration(lambda, std::move(sub));
  };

  const double log_empty =
      rho_->log_weight(lambda, MarkedConfiguration(lambda, {}));
  if (!std::isfinite(log_empty))
    throw ModelError("weight family vanishes on the empty configuration");

  const std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1u);
  const double log_full = rho_->log_weight(lambda, config_for(full));
  if (std::isinf(log_full) && log_full < 0.0) return kInf;

  KahanAccumulator acc;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    const double lw = (mask == full) ? log_full : rho_->log_weight(lambda, config_for(mask));
    if (std::isinf(lw) && lw < 0.0)
      throw ModelError(
          "weight family is not hereditarily positive: a sub-configuration of a "
          "positive-weight configuration has zero weight");
    const int removed = n - __builtin_popcount(mask);
    const double sign = (removed % 2 == 0) ? 1.0 : -1.0;
    acc.add(-sign * (lw - log_empty));
  }
  return acc.value();
}

namespace {

bool is_connected(const std::vector<Point>& pts, double r) {
  if (pts.size() <= 1) return true;
  return cluster_decompose(pts, r).clusters.size() == 1;
}

}  // namespace

HamiltonianReport hamiltonian(const VacuumPotential& phi, const Window& lambda,
                              const MarkedConfiguration& omega, const Window& delta,
                              SupportFamily support, double connect_r, int cap,
                              bool keep_contributions) {
  if (!delta.encloses(lambda))
    throw std::invalid_argument("hamiltonian needs lambda inside delta");
  const MarkedConfiguration om_d = omega.restricted_to(delta);
  const MarkedConfiguration om_ext = om_d.restricted_outside(lambda);

  HamiltonianReport report;

  const double lw_full = phi.premod().log_weight(lambda, om_d);
  const double lw_ext = phi.premod().log_weight(lambda, om_ext);
  if (std::isinf(lw_ext) && lw_ext < 0.0) {
    if (std::isfinite(lw_full))
      throw ModelError("weight family vanishes on the exterior part only");
    report.closed_form = kInf;  // both vanish; energy of the window diverges
  } else {
    report.closed_form = (std::isinf(lw_full) && lw_full < 0.0)
                             ? kInf
                             : -(lw_full - lw_ext);
  }

  const int n = om_d.size();
  std::vector<bool> in_lambda(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) in_lambda[static_cast<std::size_t>(i)] = lambda.contains(om_d[i].pos);

  KahanAccumulator acc;
  bool infinite = false;
  auto visit = [&](const std::vector<int>& indices) {
    bool meets = false;
    for (int i : indices)
      if (in_lambda[static_cast<std::size_t>(i)]) {
        meets = true;
        break;
      }
    if (!meets) return;
    const double v = phi.phi(om_d.subset(indices));
    ++report.edges_enumerated;
    if (std::isinf(v)) infinite = true;
    else if (v != 0.0) acc.add(v);
    if (keep_contributions && v != 0.0)
      report.contributions.push_back({indices, v});
  };

  if (support == SupportFamily::AllSubsets) {
    if (n > cap)
      throw std::invalid_argument("configuration exceeds the subset enumeration cap");
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> idx;
      for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1u) idx.push_back(i);
      visit(idx);
    }
  } else if (support == SupportFamily::Pairs) {
    for (int i = 0; i < n; ++i) visit({i});
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) visit({i, j});
  } else {
    if (!(connect_r > 0.0))
      throw std::invalid_argument("connected support needs a connectivity radius");
    const auto decomp = cluster_decompose(om_d.positions(), connect_r);
    for (const auto& cluster : decomp.clusters) {
      const int c = static_cast<int>(cluster.size());
      if (c > cap)
        throw std::invalid_argument("cluster exceeds the subset enumeration cap");
      for (std::uint32_t mask = 1; mask < (1u << c); ++mask) {
        std::vector<int> idx;
        std::vector<Point> pos;
        for (int i = 0; i < c; ++i) {
          if ((mask >> i) & 1u) {
            idx.push_back(cluster[static_cast<std::size_t>(i)]);
            pos.push_back(om_d[cluster[static_cast<std::size_t>(i)]].pos);
          }
        }
        // only sets that are connected on their own carry weight
        if (!is_connected(pos, connect_r)) continue;
        visit(idx);
      }
    }
  }

  report.value = infinite ? kInf : acc.value();
  return report;
}

MobiusReport mobius_reconstruct(const VacuumPotential& phi, const Window& lambda,
                                const MarkedConfiguration& omega, int cap) {
  const MarkedConfiguration om_l = omega.restricted_to(lambda);
  const int n = om_l.size();
  if (n > cap)
    throw std::invalid_argument("configuration exceeds the subset lattice cap");

  MobiusReport report;
  KahanAccumulator acc;
  bool infinite = false;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) idx.push_back(i);
    const double v = phi.phi(om_l.subset(idx));
    ++report.subsets;
    if (std::isinf(v)) infinite = true;
    else acc.add(v);
  }
  report.edge_sum = infinite ? kInf : acc.value();

  const double lw = phi.premod().log_weight(lambda, om_l);
  const double lw0 =
      phi.premod().log_weight(lambda, MarkedConfiguration(lambda, {}));
  report.weight_form = (std::isinf(lw) && lw < 0.0) ? kInf : -(lw - lw0);

  if (std::isinf(report.edge_sum) || std::isinf(report.weight_form))
    report.abs_error = (report.edge_sum == report.weight_form) ? 0.0 : kInf;
  else
    report.abs_error = std::abs(report.edge_sum - report.weight_form);
  return report;
}

FiniteRangeReport check_finite_range(const VacuumPotential& phi, double range,
                                     int dim, int trials, std::uint64_t seed,
                                     double tol) {
  if (!(range > 0.0)) throw std::invalid_argument("range must be > 0");
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");

  FiniteRangeReport report;
  RngStream rng(seed, 0xf17e);
  const double side = 4.0 * range;
  const Window box = Window::centered_box(dim, side);

  int attempts = 0;
  while (report.applicable < trials && attempts < trials * 200) {
    ++attempts;
    const int size = 2 + static_cast<int>(rng.uniform_index(5));
    std::vector<MarkedPoint> pts;
    for (int i = 0; i < size; ++i) {
      Point p;
      p.x.resize(static_cast<std::size_t>(dim));
      for (int d = 0; d < dim; ++d) p[d] = rng.uniform(-0.5 * side, 0.5 * side);
      pts.push_back({p, rng.bernoulli(0.5) ? kMarkPlus : kMarkMinus});
    }
    double max_d = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        max_d = std::max(max_d, dist2(pts[i].pos, pts[j].pos));
    if (!(max_d > range)) continue;

    MarkedConfiguration eta(box, pts);
    const double v = phi.phi(eta);
    ++report.trials;
    if (std::isinf(v)) {
      ++report.zero_branch;
      continue;
    }
    ++report.applicable;
    report.max_abs_phi = std::max(report.max_abs_phi, std::abs(v));
    if (std::abs(v) > tol && report.pass) {
      report.pass = false;
      report.witness = eta;
    }
  }
  if (report.applicable < trials) report.pass = false;
  return report;
}

}  // namespace hyperpot
