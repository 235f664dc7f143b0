#ifndef HYPERPOT_MODELS_HPP
#define HYPERPOT_MODELS_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "hyperpot/configuration.hpp"
#include "hyperpot/sampling.hpp"

namespace hyperpot {

/// A consistent family of nonnegative weights h_Lambda(omega), one per
/// bounded window, with h_Lambda(empty) = 1.  Families produced here satisfy
/// the swap identity
///   h_Delta(w_L w_ext) h_Lambda(w'_L w_ext)
///     = h_Lambda(w_L w_ext) h_Delta(w'_L w_ext)   (Lambda inside Delta),
/// which premod_swap_check() verifies numerically; the deliberately broken
/// family below violates it.
class PreModification {
public:
  virtual ~PreModification() = default;

  /// log h_Lambda(omega); -infinity encodes a vanishing weight.
  virtual double log_weight(const Window& lambda,
                            const MarkedConfiguration& omega) const = 0;

  /// Declared interaction range: the weight ratio in a window is unaffected
  /// by points farther than this from it.  nullopt = no finite range.
  virtual std::optional<double> range() const { return std::nullopt; }

  virtual std::string name() const = 0;
};

/// h == 1: the reference Poisson case.
class PoissonPremod final : public PreModification {
public:
  double log_weight(const Window&, const MarkedConfiguration&) const override {
    return 0.0;
  }
  std::optional<double> range() const override { return 0.0; }
  std::string name() const override { return "poisson"; }
};

// ---------------------------------------------------------------------------
// Two-color hard-core gas and its spin-flip evolution
// ---------------------------------------------------------------------------

struct WrmParams {
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  double r = 0.0;  // hard-core radius; interaction threshold is 2r
  double t = 0.0;  // spin-flip time, may be +inf

  void validate() const;
};

/// Cluster weight parameters a, b of the evolved model.  At t = 0 the value
/// b diverges; that case is flagged instead of letting an Inf propagate.
struct WrmAB {
  double a = 0.0;
  double b = 0.0;
  bool b_infinite = false;
};

WrmAB wrm_ab(const WrmParams& p);

/// Time at which b(t) = 1: t_G = -(1/2) log((l+ - l-)/(l+ + l-)).
/// Requires lambda_plus > lambda_minus > 0.
double critical_time(double lambda_plus, double lambda_minus);

/// b(t) for the given intensities; +inf at t = 0.  Convenience for root
/// bracketing in tests and tools.
double wrm_b_of_t(double lambda_plus, double lambda_minus, double t);

/// 1 iff every pair of points at distance < 2r carries equal marks.
bool hardcore_indicator(const MarkedConfiguration& omega, double r);

enum class SingleSite {
  Raw,      // weight carries the per-point factors (1+a)^-n+ (1+b)^-n-
  Absorbed  // per-point factors moved into the a-priori intensity
};

/// log h_Lambda(omega) of the evolved model:
///   sum over clusters of omega meeting Lambda of log(1 + a^{k} b^{l})
///   minus (raw convention only) n+(Lambda) log(1+a) + n-(Lambda) log(1+b).
/// Clusters are the < 2r components of the full configuration omega.
double wrm_log_premod(const Window& lambda, const MarkedConfiguration& omega,
                      const WrmParams& p, SingleSite convention = SingleSite::Raw);

/// Cluster potential: log(1 + a^{k} b^{l}) when eta is exactly one of the
/// clusters of omega, else 0.  eta is identified inside omega by exact
/// position/mark match.
double cluster_potential_psi(const MarkedConfiguration& eta,
                             const MarkedConfiguration& omega,
                             const WrmParams& p);

class HardcoreWrmPremod final : public PreModification {
public:
  explicit HardcoreWrmPremod(double r);
  double log_weight(const Window&, const MarkedConfiguration& omega) const override;
  std::optional<double> range() const override { return 2.0 * r_; }
  std::string name() const override { return "hardcore-wrm"; }
  double r() const { return r_; }

private:
  double r_;
};

class TimeEvolvedWrmPremod final : public PreModification {
public:
  TimeEvolvedWrmPremod(WrmParams params, SingleSite convention = SingleSite::Raw);
  double log_weight(const Window& lambda,
                    const MarkedConfiguration& omega) const override;
  std::string name() const override;
  const WrmParams& params() const { return params_; }
  WrmAB ab() const { return ab_; }
  SingleSite convention() const { return convention_; }

private:
  WrmParams params_;
  WrmAB ab_;
  SingleSite convention_;
};

// ---------------------------------------------------------------------------
// Pairwise q-color gas
// ---------------------------------------------------------------------------

/// Even pair interaction evaluated at the displacement x - y.  Built-ins are
/// radial, hence even by construction; custom callables are property-tested
/// for evenness where used.
class PairFunction {
public:
  static PairFunction zero();
  /// +inf inside |x| < R (strict), 0 outside.
  static PairFunction hard_core(double R);
  /// v inside |x| < R (strict), 0 outside.
  static PairFunction radial_step(double R, double v);
  static PairFunction custom(std::function<double(const Point&)> f,
                             std::optional<double> support_radius);

  double operator()(const Point& diff) const { return f_(diff); }
  /// Vanishes beyond this displacement norm, if known.
  std::optional<double> support_radius() const { return support_; }

private:
  std::function<double(const Point&)> f_;
  std::optional<double> support_;
};

struct PottsParams {
  PairFunction phi = PairFunction::zero();  // acts on unequal colors
  PairFunction psi = PairFunction::zero();  // acts on every pair
};

/// Pair energy delta_{marks differ} phi(x-y) + psi(x-y).
double potts_pair_potential(const MarkedPoint& x, const MarkedPoint& y,
                            const PottsParams& p);

/// Boltzmann family h_Lambda = exp(-sum of pair energies over pairs meeting
/// Lambda).  With phi = hard core at 2r and psi = 0 this reproduces the
/// two-color hard-core indicator.
class PottsPremod final : public PreModification {
public:
  explicit PottsPremod(PottsParams params);
  double log_weight(const Window& lambda,
                    const MarkedConfiguration& omega) const override;
  std::optional<double> range() const override;
  std::string name() const override { return "potts"; }
  const PottsParams& params() const { return params_; }

private:
  PottsParams params_;
};

// ---------------------------------------------------------------------------
// Negative control
// ---------------------------------------------------------------------------

/// Wraps a valid family and multiplies in a window-dependent factor
///   exp(strength * 1{vol(Lambda) > volume_gate} * 1{omega has a point in
///   probe intersect Lambda}),
/// which breaks the swap identity while keeping weight ratios bounded (so
/// detection tests retain Monte Carlo power).
class BrokenPremod final : public PreModification {
public:
  BrokenPremod(std::shared_ptr<const PreModification> base, Window probe,
               double volume_gate, double strength);
  double log_weight(const Window& lambda,
                    const MarkedConfiguration& omega) const override;
  std::string name() const override { return "broken-" + base_->name(); }

private:
  std::shared_ptr<const PreModification> base_;
  Window probe_;
  double volume_gate_;
  double strength_;
};

}  // namespace hyperpot

#endif  // HYPERPOT_MODELS_HPP
