#include "hyperpot/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "hyperpot/common.hpp"
#include "hyperpot/rng.hpp"

namespace hyperpot {

Observable Observable::count(const Window& region) {
  Observable obs;
  obs.f = [region](const MarkedConfiguration& w) {
    return static_cast<double>(w.count_in(region));
  };
  obs.support = region;
  obs.name = "count";
  return obs;
}

Observable Observable::mark_count(const Window& region, Mark mark) {
  Observable obs;
  obs.f = [region, mark](const MarkedConfiguration& w) {
    int n = 0;
    for (const auto& mp : w.points())
      if (mp.mark == mark && region.contains(mp.pos)) ++n;
    return static_cast<double>(n);
  };
  obs.support = region;
  obs.name = "mark-count(" + mark_to_string(mark) + ")";
  return obs;
}

Observable Observable::vacancy(const Window& region) {
  Observable obs;
  obs.f = [region](const MarkedConfiguration& w) {
    return w.count_in(region) == 0 ? 1.0 : 0.0;
  };
  obs.support = region;
  obs.name = "vacancy";
  return obs;
}

Observable Observable::plus_fraction(const Window& region) {
  Observable obs;
  obs.f = [region](const MarkedConfiguration& w) {
    int total = 0, plus = 0;
    for (const auto& mp : w.points())
      if (region.contains(mp.pos)) {
        ++total;
        if (mp.mark == kMarkPlus) ++plus;
      }
    return total == 0 ? 0.0 : static_cast<double>(plus) / total;
  };
  obs.support = region;
  obs.name = "plus-fraction";
  return obs;
}

Observable Observable::cluster_count(const Window& region, double r) {
  Observable obs;
  obs.f = [region, r](const MarkedConfiguration& w) {
    std::vector<Point> pos;
    for (const auto& mp : w.points())
      if (region.contains(mp.pos)) pos.push_back(mp.pos);
    return static_cast<double>(cluster_decompose(pos, r).clusters.size());
  };
  obs.support = region;
  obs.name = "cluster-count";
  return obs;
}

Observable Observable::hardcore_valid(const Window& region, double r) {
  Observable obs;
  obs.f = [region, r](const MarkedConfiguration& w) {
    std::vector<MarkedPoint> inside;
    for (const auto& mp : w.points())
      if (region.contains(mp.pos)) inside.push_back(mp);
    for (std::size_t i = 0; i < inside.size(); ++i)
      for (std::size_t j = i + 1; j < inside.size(); ++j)
        if (inside[i].mark != inside[j].mark &&
            dist2(inside[i].pos, inside[j].pos) < 2.0 * r)
          return 0.0;
    return 1.0;
  };
  obs.support = region;
  obs.name = "hardcore-valid";
  return obs;
}

Observable Observable::custom(std::function<double(const MarkedConfiguration&)> f,
                              std::optional<Window> support, std::string name) {
  Observable obs;
  obs.f = std::move(f);
  obs.support = std::move(support);
  obs.name = std::move(name);
  return obs;
}

bool windows_disjoint(const Window& a, const Window& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("window dimensions differ");
  if (a.kind() == Window::Kind::Ball && b.kind() == Window::Kind::Ball)
    return dist2(a.center(), b.center()) > a.radius() + b.radius();
  if (a.kind() == Window::Kind::Ball)
    return b.distance_to(a.center()) > a.radius();
  if (b.kind() == Window::Kind::Ball)
    return a.distance_to(b.center()) > b.radius();
  const auto& [alo, ahi] = std::pair(a.lo(), a.hi());
  const auto& [blo, bhi] = std::pair(b.lo(), b.hi());
  for (std::size_t i = 0; i < alo.size(); ++i)
    if (ahi[i] < blo[i] || bhi[i] < alo[i]) return true;
  return false;
}

SpecificationKernel::SpecificationKernel(std::shared_ptr<const PreModification> rho,
                                         IntensitySpec intensities)
    : rho_(std::move(rho)), intensities_(intensities) {
  if (!rho_) throw std::invalid_argument("kernel needs a weight family");
  intensities_.validate();
}

namespace {

struct WeightedSamples {
  std::vector<double> w;  // stabilized weights, max = 1
  std::vector<double> f;
};

// batch-means standard error of the self-normalized ratio
std::pair<double, int> batch_means_se(const WeightedSamples& s, int batches) {
  const int n = static_cast<int>(s.w.size());
  const int B = std::max(1, std::min(batches, n));
  std::vector<double> ratio;
  for (int b = 0; b < B; ++b) {
    const int lo = static_cast<int>(static_cast<long>(n) * b / B);
    const int hi = static_cast<int>(static_cast<long>(n) * (b + 1) / B);
    double sw = 0.0, swf = 0.0;
    for (int i = lo; i < hi; ++i) {
      sw += s.w[static_cast<std::size_t>(i)];
      swf += s.w[static_cast<std::size_t>(i)] * s.f[static_cast<std::size_t>(i)];
    }
    if (sw > 0.0) ratio.push_back(swf / sw);
  }
  const int used = static_cast<int>(ratio.size());
  if (used < 2) return {kInf, used};
  double mean = 0.0;
  for (double r : ratio) mean += r;
  mean /= used;
  double var = 0.0;
  for (double r : ratio) var += (r - mean) * (r - mean);
  var /= (used - 1);
  return {std::sqrt(var / used), used};
}

}  // namespace

KernelResult SpecificationKernel::apply(const Window& lambda,
                                        const Observable& obs,
                                        const MarkedConfiguration& boundary,
                                        std::uint64_t seed,
                                        const KernelOptions& opts) const {
  if (!obs.f) throw std::invalid_argument("observable has no function");
  if (opts.n_samples < 1)
    throw std::invalid_argument("kernel needs at least one sample");

  KernelResult result;
  if (obs.support && windows_disjoint(*obs.support, lambda)) {
    result.value = obs.f(boundary);
    result.proper_shortcut = true;
    return result;
  }

  const MarkedConfiguration exterior = boundary.restricted_outside(lambda);
  RngStream rng(seed, 0x5bec);

  const int n = opts.n_samples;
  std::vector<double> logw(static_cast<std::size_t>(n));
  WeightedSamples s;
  s.w.resize(static_cast<std::size_t>(n));
  s.f.resize(static_cast<std::size_t>(n));

  double max_log = -kInf;
  std::vector<MarkedConfiguration> merged;
  merged.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    MarkedConfiguration interior = sample_marked_ppp(lambda, intensities_, rng);
    merged.push_back(MarkedConfiguration::merged(interior, exterior));
    logw[static_cast<std::size_t>(i)] = rho_->log_weight(lambda, merged.back());
    max_log = std::max(max_log, logw[static_cast<std::size_t>(i)]);
  }
  if (!std::isfinite(max_log))
    throw ModelError("every sampled weight vanished in the kernel window");

  double sum_w = 0.0, sum_w2 = 0.0;
  KahanAccumulator num;
  for (int i = 0; i < n; ++i) {
    const double w = std::exp(logw[static_cast<std::size_t>(i)] - max_log);
    const double fv = w > 0.0 ? obs.f(merged[static_cast<std::size_t>(i)]) : 0.0;
    s.w[static_cast<std::size_t>(i)] = w;
    s.f[static_cast<std::size_t>(i)] = fv;
    sum_w += w;
    sum_w2 += w * w;
    num.add(w * fv);
  }

  result.value = num.value() / sum_w;
  result.ess = sum_w * sum_w / sum_w2;
  result.n_samples = n;
  result.low_ess = result.ess < opts.ess_warn_fraction * n;
  const auto [se, used] = batch_means_se(s, opts.batches);
  result.stderr_value = se;
  result.usable_batches = used;
  return result;
}

LogPartitionResult SpecificationKernel::log_partition(
    const Window& lambda, const MarkedConfiguration& boundary,
    std::uint64_t seed, const KernelOptions& opts) const {
  if (opts.n_samples < 2)
    throw std::invalid_argument("log partition needs at least two samples");

  const MarkedConfiguration exterior = boundary.restricted_outside(lambda);
  RngStream rng(seed, 0x10a2);

  const int n = opts.n_samples;
  std::vector<double> logw(static_cast<std::size_t>(n));
  double max_log = -kInf;
  for (int i = 0; i < n; ++i) {
    MarkedConfiguration interior = sample_marked_ppp(lambda, intensities_, rng);
    logw[static_cast<std::size_t>(i)] =
        rho_->log_weight(lambda, MarkedConfiguration::merged(interior, exterior));
    max_log = std::max(max_log, logw[static_cast<std::size_t>(i)]);
  }
  if (!std::isfinite(max_log))
    throw ModelError("every sampled weight vanished in the kernel window");

  KahanAccumulator sum;
  for (double lw : logw) sum.add(std::exp(lw - max_log));
  const double mean = sum.value() / n;
  double var = 0.0;
  for (double lw : logw) {
    const double d = std::exp(lw - max_log) - mean;
    var += d * d;
  }
  var /= (n - 1);

  LogPartitionResult result;
  result.log_value = max_log + std::log(mean);
  result.stderr_log = std::sqrt(var / n) / mean;  // se(Z)/Z
  result.n_samples = n;
  return result;
}

SwapReport premod_swap_check(const PreModification& rho, const Window& lambda,
                             const Window& delta,
                             const IntensitySpec& intensities, int trials,
                             std::uint64_t seed, double tol) {
  if (!delta.encloses(lambda))
    throw std::invalid_argument("swap check needs lambda inside delta");
  intensities.validate();

  SwapReport report;
  report.trials = trials;
  RngStream rng(seed, 0x54a9);

  for (int t = 0; t < trials; ++t) {
    const MarkedConfiguration ext =
        sample_marked_ppp(delta, intensities, rng).restricted_outside(lambda);
    const MarkedConfiguration in1 = sample_marked_ppp(lambda, intensities, rng);
    const MarkedConfiguration in2 = sample_marked_ppp(lambda, intensities, rng);

    const MarkedConfiguration w1 = MarkedConfiguration::merged(in1, ext);
    const MarkedConfiguration w2 = MarkedConfiguration::merged(in2, ext);

    const double lhs = rho.log_weight(delta, w1) + rho.log_weight(lambda, w2);
    const double rhs = rho.log_weight(lambda, w1) + rho.log_weight(delta, w2);

    const bool lhs_zero = !std::isfinite(lhs);
    const bool rhs_zero = !std::isfinite(rhs);
    double residual;
    if (lhs_zero && rhs_zero) {
      ++report.zero_pairs;
      residual = 0.0;
    } else if (lhs_zero != rhs_zero) {
      residual = kInf;
    } else {
      ++report.finite;
      residual = std::abs(lhs - rhs);
    }
    if (residual > report.max_abs_residual) report.max_abs_residual = residual;
    if (residual > tol && !report.witness) {
      report.pass = false;
      report.witness = ext;
    }
  }
  if (report.max_abs_residual > tol) report.pass = false;
  return report;
}

DlrReport dlr_consistency_check(std::shared_ptr<const PreModification> rho,
                                const Window& lambda, const Window& delta,
                                const IntensitySpec& intensities,
                                const Observable& obs,
                                const MarkedConfiguration& boundary,
                                long n_total, std::uint64_t seed, int batches) {
  if (!delta.encloses(lambda))
    throw std::invalid_argument("consistency check needs lambda inside delta");
  if (n_total < 16) throw std::invalid_argument("sample budget too small");

  const SpecificationKernel kernel(rho, intensities);
  const int n_side = static_cast<int>(std::floor(std::sqrt(
      static_cast<double>(n_total))));

  DlrReport report;
  report.n_outer = n_side;
  report.n_inner = n_side;

  KernelOptions one_opts;
  one_opts.n_samples = static_cast<int>(n_total);
  one_opts.batches = batches;
  const KernelResult one = kernel.apply(delta, obs, boundary, seed ^ 0x1, one_opts);
  report.one_stage = one.value;
  report.one_se = one.stderr_value;

  // outer stage: Poisson proposals on delta weighted by h_delta; inner stage:
  // the lambda kernel applied to each outer sample
  const MarkedConfiguration exterior = boundary.restricted_outside(delta);
  RngStream rng(seed, 0xd18);

  std::vector<double> w(static_cast<std::size_t>(n_side));
  std::vector<double> g(static_cast<std::size_t>(n_side));
  std::vector<double> logw(static_cast<std::size_t>(n_side));
  std::vector<MarkedConfiguration> outer;
  outer.reserve(static_cast<std::size_t>(n_side));

  double max_log = -kInf;
  for (int j = 0; j < n_side; ++j) {
    MarkedConfiguration interior = sample_marked_ppp(delta, intensities, rng);
    outer.push_back(MarkedConfiguration::merged(interior, exterior));
    logw[static_cast<std::size_t>(j)] = rho->log_weight(delta, outer.back());
    max_log = std::max(max_log, logw[static_cast<std::size_t>(j)]);
  }
  if (!std::isfinite(max_log))
    throw ModelError("every outer weight vanished in the consistency check");

  KernelOptions inner_opts;
  inner_opts.n_samples = n_side;
  inner_opts.batches = std::min(batches, n_side);
  double sum_w = 0.0, sum_w2 = 0.0;
  for (int j = 0; j < n_side; ++j) {
    const double wj = std::exp(logw[static_cast<std::size_t>(j)] - max_log);
    w[static_cast<std::size_t>(j)] = wj;
    sum_w += wj;
    sum_w2 += wj * wj;
    if (wj > 0.0) {
      const KernelResult inner = kernel.apply(
          lambda, obs, outer[static_cast<std::size_t>(j)], rng.next_u64(),
          inner_opts);
      g[static_cast<std::size_t>(j)] = inner.value;
    } else {
      g[static_cast<std::size_t>(j)] = 0.0;
    }
  }

  KahanAccumulator num;
  for (int j = 0; j < n_side; ++j)
    num.add(w[static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(j)]);
  report.two_stage = num.value() / sum_w;
  report.ess_outer = sum_w * sum_w / sum_w2;

  // batch means over the outer samples; inner noise is folded into the
  // batch-to-batch variation
  const int B = std::max(1, std::min(batches, n_side));
  std::vector<double> ratio;
  for (int b = 0; b < B; ++b) {
    const int lo = static_cast<int>(static_cast<long>(n_side) * b / B);
    const int hi = static_cast<int>(static_cast<long>(n_side) * (b + 1) / B);
    double sw = 0.0, swg = 0.0;
    for (int j = lo; j < hi; ++j) {
      sw += w[static_cast<std::size_t>(j)];
      swg += w[static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(j)];
    }
    if (sw > 0.0) ratio.push_back(swg / sw);
  }
  if (ratio.size() >= 2) {
    double mean = 0.0;
    for (double r : ratio) mean += r;
    mean /= static_cast<double>(ratio.size());
    double var = 0.0;
    for (double r : ratio) var += (r - mean) * (r - mean);
    var /= static_cast<double>(ratio.size() - 1);
    report.two_se = std::sqrt(var / static_cast<double>(ratio.size()));
  } else {
    report.two_se = kInf;
  }

  report.z = (report.two_stage - report.one_stage) /
             std::sqrt(report.one_se * report.one_se +
                       report.two_se * report.two_se);
  return report;
}

}  // namespace hyperpot
