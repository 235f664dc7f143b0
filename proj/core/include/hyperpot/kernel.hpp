#ifndef HYPERPOT_KERNEL_HPP
#define HYPERPOT_KERNEL_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperpot/models.hpp"
#include "hyperpot/sampling.hpp"

namespace hyperpot {

/// Test function of a configuration together with the region it reads.
/// `support` is a promise: the value depends on the points inside that window
/// only.  The built-in factories keep the promise by construction; custom
/// observables state their own.
struct Observable {
  std::function<double(const MarkedConfiguration&)> f;
  std::optional<Window> support;
  std::string name = "custom";

  double operator()(const MarkedConfiguration& omega) const { return f(omega); }

  /// Number of points in `region`.
  static Observable count(const Window& region);
  /// Number of points of one mark in `region`.
  static Observable mark_count(const Window& region, Mark mark);
  /// 1 if `region` holds no point, else 0.
  static Observable vacancy(const Window& region);
  /// Plus-count over total count of the points in `region`; 0 when empty.
  static Observable plus_fraction(const Window& region);
  /// Number of clusters (threshold 2r) of the points inside `region`.
  static Observable cluster_count(const Window& region, double r);
  /// 1 if the points inside `region` carry no opposite-mark pair within 2r.
  static Observable hardcore_valid(const Window& region, double r);
  static Observable custom(std::function<double(const MarkedConfiguration&)> f,
                           std::optional<Window> support, std::string name);
};

/// True when the windows certainly share no point (exact for box/box,
/// ball/ball and box/ball).
bool windows_disjoint(const Window& a, const Window& b);

struct KernelOptions {
  int n_samples = 10000;
  int batches = 32;
  /// Warn (flag, not throw) when ESS falls under this fraction of n_samples.
  double ess_warn_fraction = 0.01;
};

struct KernelResult {
  double value = 0.0;
  double stderr_value = 0.0;  // batch-means standard error
  double ess = 0.0;           // (sum w)^2 / sum w^2
  int n_samples = 0;
  int usable_batches = 0;
  bool proper_shortcut = false;  // observable reads outside the window only
  bool low_ess = false;
};

struct LogPartitionResult {
  double log_value = 0.0;
  double stderr_log = 0.0;  // delta-method standard error of the log
  int n_samples = 0;
};

/// Probability kernel of the weight family on a window: the two-color Poisson
/// process inside, reweighted by h_Lambda given the boundary configuration
/// outside.  Expectations are computed by self-normalized importance sampling
/// against the Poisson reference, so the normalizing constant never needs to
/// be formed.
class SpecificationKernel {
public:
  SpecificationKernel(std::shared_ptr<const PreModification> rho,
                      IntensitySpec intensities);

  /// E[ f | boundary outside lambda ].  The boundary's points inside lambda
  /// are discarded and resampled.  When the observable's support misses
  /// lambda the boundary value is returned exactly (properness).
  KernelResult apply(const Window& lambda, const Observable& obs,
                     const MarkedConfiguration& boundary, std::uint64_t seed,
                     const KernelOptions& opts = {}) const;

  /// log of the normalizing constant Z_lambda(boundary) = reference mean of
  /// the weight.
  LogPartitionResult log_partition(const Window& lambda,
                                   const MarkedConfiguration& boundary,
                                   std::uint64_t seed,
                                   const KernelOptions& opts = {}) const;

  const PreModification& premod() const { return *rho_; }
  const IntensitySpec& intensities() const { return intensities_; }

private:
  std::shared_ptr<const PreModification> rho_;
  IntensitySpec intensities_;
};

struct SwapReport {
  int trials = 0;
  int finite = 0;      // trials with all four weights positive
  int zero_pairs = 0;  // trials where both sides vanish together
  double max_abs_residual = 0.0;
  bool pass = true;
  std::optional<MarkedConfiguration> witness;  // first violating exterior
};

/// Numerical check of the swap identity
///   h_Delta(w_L w_ext) h_Lambda(w'_L w_ext)
///     = h_Lambda(w_L w_ext) h_Delta(w'_L w_ext)
/// on Poisson-sampled interiors w_L, w'_L and exteriors w_ext.  A trial where
/// exactly one side vanishes is a violation; both sides vanishing together is
/// consistent and counted separately.
SwapReport premod_swap_check(const PreModification& rho, const Window& lambda,
                             const Window& delta,
                             const IntensitySpec& intensities, int trials,
                             std::uint64_t seed, double tol = 1e-9);

struct DlrReport {
  double one_stage = 0.0;
  double one_se = 0.0;
  double two_stage = 0.0;
  double two_se = 0.0;
  double z = 0.0;  // (two_stage - one_stage) / sqrt(one_se^2 + two_se^2)
  int n_outer = 0;
  int n_inner = 0;
  double ess_outer = 0.0;
};

/// Kernel composition test: E_Delta[f] against E_Delta[ E_Lambda[f | .] ]
/// for lambda inside delta.  A consistent family makes the two agree up to
/// Monte Carlo noise; the z statistic measures the discrepancy.  The budget
/// n_total is spent as n_total one-stage samples and floor(sqrt(n_total))
/// outer times floor(sqrt(n_total)) inner samples for the two-stage route.
DlrReport dlr_consistency_check(std::shared_ptr<const PreModification> rho,
                                const Window& lambda, const Window& delta,
                                const IntensitySpec& intensities,
                                const Observable& obs,
                                const MarkedConfiguration& boundary,
                                long n_total, std::uint64_t seed,
                                int batches = 32);

}  // namespace hyperpot

#endif  // HYPERPOT_KERNEL_HPP
