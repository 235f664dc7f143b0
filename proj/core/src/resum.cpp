#include "hyperpot/resum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "hyperpot/common.hpp"
#include "hyperpot/rng.hpp"
#include "hyperpot/sampling.hpp"

namespace hyperpot {

Grading grade(const MarkedConfiguration& omega, const Ordering& ord,
              const RadiiSchedule& schedule) {
  const int n = omega.size();
  Grading g{ord, schedule, {}, {}};
  g.index_of.assign(static_cast<std::size_t>(n),
                    std::vector<int>(static_cast<std::size_t>(n), 0));

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (ord.less(omega[j].pos, omega[i].pos)) continue;  // j below anchor i
      g.index_of[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          annulus_index(ord, omega[i].pos, omega[j].pos, schedule,
                        AnnulusSide::GeqAtAnchor);
    }
  }

  for (int i = 0; i < n; ++i) {
    std::map<int, std::vector<int>> annuli;  // m -> points of that annulus
    for (int j = 0; j < n; ++j) {
      const int m = g.index_of[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (m > 0) annuli[m].push_back(j);
    }
    // (i, 1) exists always: the singleton {i} classifies there
    if (annuli.find(1) == annuli.end()) annuli[1] = {};
    for (auto& [m, members] : annuli) {
      GradingCell cell;
      cell.anchor = i;
      cell.m = m;
      cell.members.push_back(i);
      cell.members.insert(cell.members.end(), members.begin(), members.end());
      g.cells.push_back(std::move(cell));
    }
  }
  return g;
}

namespace {

bool subset_connected(const std::vector<Point>& pts, double r) {
  if (pts.size() <= 1) return true;
  return cluster_decompose(pts, r).clusters.size() == 1;
}

// candidate indices for subsets classified at (anchor, <= m): the anchor plus
// every point with annulus index in [1, m]
std::vector<int> region_candidates(const Grading& g, int anchor, int m) {
  std::vector<int> out{anchor};
  const auto& row = g.index_of[static_cast<std::size_t>(anchor)];
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] >= 1 && row[j] <= m) out.push_back(static_cast<int>(j));
  return out;
}

// Whether the cell's region (anchor ball of schedule radius r_m, in the
// variant norm) can reach the window.  Conservative in the inclusive
// direction: a cell this test excludes has its region disjoint from the
// window in either norm, so its value reads only points outside the window.
// That one-sidedness is what keeps the regrouped window energy differing
// from the hyperedge sum by an exterior-measurable term only.
bool cell_region_meets(const Window& lambda, const Point& anchor, double r_m) {
  const double inflate = std::sqrt(static_cast<double>(anchor.dim()));
  return lambda.distance_to(anchor) <= r_m * inflate;
}

}  // namespace

double resum_psi(const VacuumPotential& phi, const MarkedConfiguration& omega,
                 const Grading& grading, const GradingCell& cell,
                 SupportFamily support, double connect_r, int cap) {
  std::vector<int> cand = region_candidates(grading, cell.anchor, cell.m);

  if (support == SupportFamily::ConnectedSets) {
    if (!(connect_r > 0.0))
      throw std::invalid_argument("connected support needs a connectivity radius");
    // a connected subset through the anchor stays inside the anchor's
    // connectivity cluster of the candidate set
    std::vector<Point> pos;
    pos.reserve(cand.size());
    for (int j : cand) pos.push_back(omega[j].pos);
    const auto decomp = cluster_decompose(pos, connect_r);
    const int anchor_cluster = decomp.label[0];  // cand[0] is the anchor
    std::vector<int> kept;
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (decomp.label[i] == anchor_cluster) kept.push_back(cand[static_cast<std::size_t>(i)]);
    cand = std::move(kept);
  }

  const int extra = static_cast<int>(cand.size()) - 1;
  if (extra > cap)
    throw std::invalid_argument("grading cell exceeds the enumeration cap");

  const auto& row = grading.index_of[static_cast<std::size_t>(cell.anchor)];
  KahanAccumulator acc;
  bool infinite = false;
  for (std::uint32_t mask = 0; mask < (1u << extra); ++mask) {
    std::vector<int> idx{cell.anchor};
    int max_m = 1;
    for (int i = 0; i < extra; ++i) {
      if ((mask >> i) & 1u) {
        const int j = cand[static_cast<std::size_t>(i + 1)];
        idx.push_back(j);
        max_m = std::max(max_m, row[static_cast<std::size_t>(j)]);
      }
    }
    if (max_m != cell.m) continue;
    if (support == SupportFamily::Pairs && idx.size() > 2) continue;
    if (support == SupportFamily::ConnectedSets) {
      std::vector<Point> pos;
      pos.reserve(idx.size());
      for (int j : idx) pos.push_back(omega[j].pos);
      if (!subset_connected(pos, connect_r)) continue;
    }
    const double v = phi.phi(omega.subset(idx));
    if (std::isinf(v)) infinite = true;
    else acc.add(v);
  }
  return infinite ? kInf : acc.value();
}

double resum_psi_closed_form(const PreModification& rho,
                             const MarkedConfiguration& omega,
                             const Grading& grading, const GradingCell& cell) {
  const Point& x = omega[cell.anchor].pos;
  const Window wx = Window::box(x.x, x.x);  // degenerate window {x}

  auto order_sum = [&](int m) -> double {
    if (m <= 0) return 0.0;
    std::vector<int> geq = region_candidates(grading, cell.anchor, m);
    std::vector<int> gt(geq.begin() + 1, geq.end());
    const double lw_geq = rho.log_weight(wx, omega.subset(geq));
    const double lw_gt = rho.log_weight(wx, omega.subset(gt));
    return -(lw_geq - lw_gt);
  };

  return order_sum(cell.m) - order_sum(cell.m - 1);
}

double wrm_truncation_modulus(const WrmParams& p, double distance, double K) {
  const WrmAB ab = wrm_ab(p);
  if (ab.b_infinite || std::max(ab.a, ab.b) >= 1.0)
    throw std::invalid_argument(
        "truncation modulus needs the contracting regime max(a, b) < 1");
  if (!(K > 0.0)) throw std::invalid_argument("attachment bound must be > 0");
  const double c = std::max(ab.a, ab.b);
  return 2.0 * K * std::log1p(std::exp(distance / (2.0 * p.r) * std::log(c)));
}

double packing_attachment_bound(int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  return std::pow(4.0, dim);
}

RadiiSchedule radii_schedule_wrm(const WrmParams& p, int m_max, double K,
                                 double grid_step) {
  if (m_max < 1) throw std::invalid_argument("schedule needs m_max >= 1");
  if (!(grid_step > 0.0)) throw std::invalid_argument("grid step must be > 0");
  const WrmAB ab = wrm_ab(p);
  if (ab.b_infinite || std::max(ab.a, ab.b) >= 1.0)
    throw std::invalid_argument(
        "schedule needs the contracting regime max(a, b) < 1");
  const double log_c = std::log(std::max(ab.a, ab.b));

  std::vector<double> radii;
  long q = 1;
  for (int m = 1; m <= m_max; ++m) {
    const double target = 1.0 / (static_cast<double>(m) * m);
    // closed-form starting guess, then verify on the grid
    const double rhs = std::expm1(target / (2.0 * K));
    const double rho_star = 2.0 * p.r * std::log(rhs) / log_c;
    q = std::max(q, static_cast<long>(std::floor(rho_star / grid_step)));
    if (q < 1) q = 1;
    while (!(wrm_truncation_modulus(p, static_cast<double>(q) * grid_step, K) <
             target))
      ++q;
    radii.push_back(static_cast<double>(q) * grid_step);
  }
  return RadiiSchedule::from_radii(std::move(radii));
}

double density_statistic(const MarkedConfiguration& omega) {
  if (omega.empty()) return 0.0;
  const int d = omega.dim();
  double sup = 0.0;
  for (int n = 1;; ++n) {
    const Window ball = Window::centered_ball(d, static_cast<double>(n));
    const int count = omega.count_in(ball);
    sup = std::max(sup, count / std::pow(static_cast<double>(n), d));
    if (count == omega.size()) break;
    if (n > 1000000) throw std::logic_error("density statistic did not stabilize");
  }
  return sup;
}

SummabilityReport abs_sum_partial(const VacuumPotential& phi, const Window& lambda,
                                  const MarkedConfiguration& omega,
                                  const Grading& grading,
                                  const std::vector<Window>& delta_seq,
                                  SupportFamily support, double connect_r,
                                  int cap) {
  SummabilityReport report;
  report.density_statistic = density_statistic(omega);

  std::map<int, double> index_sum;
  for (std::size_t c = 0; c < grading.cells.size(); ++c) {
    const auto& cell = grading.cells[c];
    CellValue cv;
    cv.cell = static_cast<int>(c);
    cv.psi = resum_psi(phi, omega, grading, cell, support, connect_r, cap);
    cv.meets_lambda = cell_region_meets(lambda, omega[cell.anchor].pos,
                                        grading.schedule.radius(cell.m));
    for (std::size_t k = 0; k < delta_seq.size(); ++k) {
      bool inside = true;
      for (int j : cell.members)
        if (!delta_seq[k].contains(omega[j].pos)) {
          inside = false;
          break;
        }
      if (inside) {
        cv.first_delta = static_cast<int>(k);
        break;
      }
    }
    if (cv.meets_lambda)
      index_sum[cell.m] += std::abs(cv.psi);
    report.cells.push_back(std::move(cv));
  }

  report.partial_sums.assign(delta_seq.size(), 0.0);
  for (std::size_t k = 0; k < delta_seq.size(); ++k) {
    KahanAccumulator acc;
    for (const auto& cv : report.cells)
      if (cv.meets_lambda && cv.first_delta >= 0 &&
          cv.first_delta <= static_cast<int>(k))
        acc.add(std::abs(cv.psi));
    report.partial_sums[k] = acc.value();
  }
  for (std::size_t k = 1; k < report.partial_sums.size(); ++k)
    if (report.partial_sums[k] < report.partial_sums[k - 1] - 1e-12)
      report.nondecreasing = false;

  for (const auto& [m, s] : index_sum) report.per_index.emplace_back(m, s);
  return report;
}

EquivalenceReport hamiltonian_equivalence_check(
    const VacuumPotential& phi, const Window& lambda,
    const std::vector<MarkedConfiguration>& interiors,
    const MarkedConfiguration& exterior, const Ordering& ord,
    const RadiiSchedule& schedule, SupportFamily support, double connect_r,
    int cap) {
  if (interiors.empty())
    throw std::invalid_argument("equivalence check needs interior variants");

  EquivalenceReport report;
  for (const auto& interior : interiors) {
    const MarkedConfiguration combined = MarkedConfiguration::merged(interior, exterior);

    // window covering everything, for the edge-sum truncation
    auto [lo, hi] = combined.window().bounding_box();
    auto [llo, lhi] = lambda.bounding_box();
    for (std::size_t i = 0; i < lo.size(); ++i) {
      lo[i] = std::min(lo[i], llo[i]) - 1.0;
      hi[i] = std::max(hi[i], lhi[i]) + 1.0;
    }
    const Window delta_all = Window::box(lo, hi);

    const HamiltonianReport hr =
        hamiltonian(phi, lambda, combined, delta_all, support, connect_r, cap);
    report.h_edge.push_back(hr.value);

    const Grading g = grade(combined, ord, schedule);
    KahanAccumulator acc;
    bool infinite = false;
    for (const auto& cell : g.cells) {
      if (!cell_region_meets(lambda, combined[cell.anchor].pos,
                             g.schedule.radius(cell.m)))
        continue;
      const double v = resum_psi(phi, combined, g, cell, support, connect_r, cap);
      if (std::isinf(v)) infinite = true;
      else acc.add(v);
    }
    report.h_regroup.push_back(infinite ? kInf : acc.value());
  }

  double lo_d = kInf, hi_d = -kInf;
  for (std::size_t i = 0; i < report.h_edge.size(); ++i) {
    const double d = report.h_regroup[i] - report.h_edge[i];
    report.difference.push_back(d);
    lo_d = std::min(lo_d, d);
    hi_d = std::max(hi_d, d);
  }
  report.spread = hi_d - lo_d;
  return report;
}

double kappa_probe_value(const PreModification& rho, int n,
                         const MarkedConfiguration& probe) {
  if (n < 1) throw std::invalid_argument("kappa index must be >= 1");
  const int d = probe.dim();
  std::vector<double> origin(static_cast<std::size_t>(d), 0.0);
  const Window w0 = Window::box(origin, origin);
  const Window ball = Window::centered_ball(d, static_cast<double>(n));
  const double full = rho.log_weight(w0, probe);
  const double trunc = rho.log_weight(w0, probe.restricted_to(ball));
  return std::abs(full - trunc);
}

KappaReport kappa_modulus(const PreModification& rho, int n,
                          const std::vector<MarkedConfiguration>& probes,
                          double analytic_bound) {
  KappaReport report;
  report.n = n;
  report.analytic_bound = analytic_bound;
  for (const auto& probe : probes) {
    const double v = kappa_probe_value(rho, n, probe);
    report.probe_values.push_back(v);
    report.estimate = std::max(report.estimate, v);
  }
  return report;
}

std::vector<MarkedConfiguration> wrm_kappa_probes(const WrmParams& p, int n,
                                                  int dim, int random_probes,
                                                  std::uint64_t seed) {
  p.validate();
  std::vector<MarkedConfiguration> probes;
  const double margin = 4.0 * p.r + 1.0;
  const Window support =
      Window::centered_box(dim, static_cast<double>(n) + 2.0 * margin);

  // adversarial probe: chain from the origin crossing the ball boundary with
  // spacing r (well below the 2r connectivity threshold)
  {
    std::vector<MarkedPoint> pts;
    const double extent = 0.5 * n + 2.0 * p.r;
    const int steps = static_cast<int>(std::ceil(extent / p.r));
    for (int k = 0; k <= steps; ++k) {
      Point pt;
      pt.x.assign(static_cast<std::size_t>(dim), 0.0);
      pt[0] = k * p.r;
      pts.push_back({pt, kMarkPlus});
    }
    probes.emplace_back(support, std::move(pts));
  }

  for (int i = 0; i < random_probes; ++i) {
    RngStream rng(seed, 0xca55a + static_cast<std::uint64_t>(i));
    MarkedConfiguration sample = sample_marked_ppp(
        support, IntensitySpec{p.lambda_plus, p.lambda_minus}, rng);
    // pin a point at the origin so the origin window sees a cluster
    Point origin;
    origin.x.assign(static_cast<std::size_t>(dim), 0.0);
    std::vector<MarkedPoint> pts = sample.points();
    bool have_origin = false;
    for (const auto& mp : pts)
      if (mp.pos == origin) have_origin = true;
    if (!have_origin) pts.push_back({origin, kMarkPlus});
    probes.emplace_back(support, std::move(pts));
  }
  return probes;
}

double wrm_kappa_bound(const WrmParams& p, int n, double K) {
  const WrmAB ab = wrm_ab(p);
  if (ab.b_infinite || std::max(ab.a, ab.b) >= 1.0)
    throw std::invalid_argument(
        "kappa bound needs the contracting regime max(a, b) < 1");
  const double c = std::max(ab.a, ab.b);
  return 2.0 * K * std::log1p(std::exp(n * std::log(c) / (4.0 * p.r)));
}

}  // namespace hyperpot
