#ifndef HYPERPOT_RESUM_HPP
#define HYPERPOT_RESUM_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hyperpot/vacuum.hpp"

namespace hyperpot {

/// One grading cell (x, m): anchor point x of the configuration and annulus
/// index m >= 1.  `members` lists the anchor together with the points of the
/// m-th annulus around it (restricted to points above the anchor in the
/// ordering); this set is the representative hyperedge carrying the
/// regrouped value.
struct GradingCell {
  int anchor = 0;
  int m = 1;
  std::vector<int> members;
};

struct Grading {
  Ordering ordering;
  RadiiSchedule schedule;
  std::vector<GradingCell> cells;
  /// annulus index of point j relative to anchor i (0 where undefined, i.e.
  /// j not above i); square by configuration size
  std::vector<std::vector<int>> index_of;
};

/// Builds every nonempty cell of the configuration: (x, 1) for each point x,
/// plus (x, m) whenever the m-th annulus above x holds a point.  Every
/// nonempty subset of the configuration is classified into exactly one cell:
/// anchor = its least point, index = the largest annulus index among its
/// members (equivalently the smallest m whose region contains the subset,
/// which is what makes the cell value depend on the configuration inside
/// that region only).
Grading grade(const MarkedConfiguration& omega, const Ordering& ord,
              const RadiiSchedule& schedule);

/// Regrouped hyperedge value of one cell: the sum of phi over all subsets
/// classified into that cell.  The support family prunes subsets exactly as
/// in hamiltonian().
double resum_psi(const VacuumPotential& phi, const MarkedConfiguration& omega,
                 const Grading& grading, const GradingCell& cell,
                 SupportFamily support, double connect_r = 0.0, int cap = 18);

/// Same value through the weight family instead of hyperedge enumeration:
/// telescoping of the subset sums anchored at the cell's point,
///   S_m = -log( h_{x}(omega on A^>=_{x,m}) / h_{x}(omega on A^>_{x,m}) ),
///   psi = S_m - S_{m-1},
/// where h_{x} is the weight at the degenerate window {x}.  Independent
/// route used to cross-check resum_psi.
double resum_psi_closed_form(const PreModification& rho,
                             const MarkedConfiguration& omega,
                             const Grading& grading, const GradingCell& cell);

/// Analytic truncation modulus of the evolved two-color family:
/// 2 K log(1 + c^{distance/(2r)}), c = max(a, b).  Requires c < 1.
double wrm_truncation_modulus(const WrmParams& p, double distance, double K);

/// Packing bound on the number of clusters that can touch a point:
/// ceil(vol(B_{2r}) / vol(B_{r/2})) = 4^dim.
double packing_attachment_bound(int dim);

/// Radii schedule tuned so the analytic modulus at r_m falls below m^{-2}:
/// r_m = smallest multiple of grid_step with
/// 2 K log(1 + c^{r_m/(2r)}) < m^{-2}.  Nondecreasing and cofinal.
RadiiSchedule radii_schedule_wrm(const WrmParams& p, int m_max, double K,
                                 double grid_step = 0.5);

struct CellValue {
  int cell = 0;        // index into grading.cells
  double psi = 0.0;
  bool meets_lambda = false;
  int first_delta = -1;  // smallest Delta index containing the members, -1 if none
};

struct SummabilityReport {
  std::vector<CellValue> cells;
  std::vector<double> partial_sums;  // sum of |psi| over cells meeting lambda
                                     // whose members fit in Delta_k
  /// per annulus index m: total |psi| over cells meeting lambda (largest Delta)
  std::vector<std::pair<int, double>> per_index;
  double density_statistic = 0.0;  // sup_n n^{-d} |omega on the diameter-n ball|
  bool nondecreasing = true;
};

/// Partial sums of sum |psi| over the growing window sequence, plus the
/// per-annulus-index increments used by the decay assertions.
SummabilityReport abs_sum_partial(const VacuumPotential& phi, const Window& lambda,
                                  const MarkedConfiguration& omega,
                                  const Grading& grading,
                                  const std::vector<Window>& delta_seq,
                                  SupportFamily support, double connect_r = 0.0,
                                  int cap = 18);

/// sup_n n^{-dim} |omega restricted to the centered ball of diameter n|.
double density_statistic(const MarkedConfiguration& omega);

struct EquivalenceReport {
  std::vector<double> h_edge;      // hyperedge-sum energies per interior variant
  std::vector<double> h_regroup;   // regrouped energies per interior variant
  std::vector<double> difference;  // h_regroup - h_edge
  double spread = 0.0;             // max - min of difference
};

/// The regrouped potential changes the window energy only by an exterior
/// boundary term: across interior variants (same exterior) the difference of
/// the two energies is constant.  `spread` measures that constancy.
EquivalenceReport hamiltonian_equivalence_check(
    const VacuumPotential& phi, const Window& lambda,
    const std::vector<MarkedConfiguration>& interiors,
    const MarkedConfiguration& exterior, const Ordering& ord,
    const RadiiSchedule& schedule, SupportFamily support, double connect_r = 0.0,
    int cap = 18);

struct KappaReport {
  int n = 0;
  double estimate = 0.0;  // max over probes
  std::vector<double> probe_values;
  double analytic_bound = 0.0;  // 0 when no bound applies
};

/// |log h_0(probe) - log h_0(probe truncated to the diameter-n ball)| where
/// h_0 is the weight at the degenerate origin window.
double kappa_probe_value(const PreModification& rho, int n,
                         const MarkedConfiguration& probe);

KappaReport kappa_modulus(const PreModification& rho, int n,
                          const std::vector<MarkedConfiguration>& probes,
                          double analytic_bound = 0.0);

/// Probe family for the evolved two-color model: a maximum-density chain
/// from the origin crossing the truncation boundary, plus Poisson probes
/// pinned at the origin.
std::vector<MarkedConfiguration> wrm_kappa_probes(const WrmParams& p, int n,
                                                  int dim, int random_probes,
                                                  std::uint64_t seed);

/// 2 K log(1 + s^n) with s = c^{1/(4r)}: a chain from the origin must spend
/// at least n/(4r) points to cross the diameter-n ball.
double wrm_kappa_bound(const WrmParams& p, int n, double K);

}  // namespace hyperpot

#endif  // HYPERPOT_RESUM_HPP
