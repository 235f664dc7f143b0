// Micro-benchmarks for the hot paths: cluster decomposition, weight
// evaluation, hyperedge extraction, window energies, sampling and the kernel.
// Potential caches are disabled where they would hide the work being measured.

#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "hyperpot/geometry.hpp"
#include "hyperpot/kernel.hpp"
#include "hyperpot/models.hpp"
#include "hyperpot/resum.hpp"
#include "hyperpot/sampling.hpp"
#include "hyperpot/series.hpp"
#include "hyperpot/vacuum.hpp"

namespace {

using namespace hyperpot;

const WrmParams kModel{2.0, 1.0, 0.5, 1.0};

MarkedConfiguration sampled(double side, double lp, double lm,
                            std::uint64_t seed) {
  return sample_marked_ppp(Window::centered_box(2, side), {lp, lm}, seed);
}

// chain with spacing 0.3 and alternating marks: connected at threshold 2r = 1
MarkedConfiguration chain_edge(int n) {
  std::vector<MarkedPoint> pts;
  for (int i = 0; i < n; ++i)
    pts.push_back({Point{0.3 * i, 0.0}, i % 2 == 0 ? kMarkPlus : kMarkMinus});
  return MarkedConfiguration(Window::box({-1.0, -1.0}, {0.3 * n + 1.0, 1.0}),
                             std::move(pts));
}

void BM_cluster_decompose(benchmark::State& state) {
  const auto n = static_cast<double>(state.range(0));
  // intensity tuned so the expected point count matches the argument
  const double side = 10.0;
  const auto cfg = sampled(side, n / (side * side) / 2.0,
                           n / (side * side) / 2.0, 17);
  const auto pts = cfg.positions();
  for (auto _ : state)
    benchmark::DoNotOptimize(cluster_decompose(pts, 0.5).clusters.size());
  state.SetItemsProcessed(state.iterations() * cfg.size());
}
BENCHMARK(BM_cluster_decompose)->Arg(64)->Arg(256)->Arg(1024);

void BM_wrm_log_weight(benchmark::State& state) {
  const auto cfg = sampled(8.0, 1.0, 0.5, 23);
  const TimeEvolvedWrmPremod rho(kModel);
  const Window lambda = Window::centered_box(2, 4.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(rho.log_weight(lambda, cfg));
  state.SetItemsProcessed(state.iterations() * cfg.size());
}
BENCHMARK(BM_wrm_log_weight);

void BM_vacuum_phi(benchmark::State& state) {
  const auto eta = chain_edge(static_cast<int>(state.range(0)));
  VacuumOptions opts;
  opts.use_cache = false;  // measure the evaluation, not the cache
  const VacuumPotential phi(
      std::make_shared<TimeEvolvedWrmPremod>(kModel), opts);
  for (auto _ : state)
    benchmark::DoNotOptimize(phi.phi(eta));
}
BENCHMARK(BM_vacuum_phi)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_hamiltonian(benchmark::State& state) {
  const auto omega = sampled(6.0, 0.3, 0.1, 31);
  VacuumOptions opts;
  opts.use_cache = false;
  const VacuumPotential phi(
      std::make_shared<TimeEvolvedWrmPremod>(kModel), opts);
  const Window lambda = Window::centered_box(2, 3.0);
  const Window delta = Window::centered_box(2, 6.0);
  for (auto _ : state) {
    const auto rep = hamiltonian(phi, lambda, omega, delta,
                                 SupportFamily::ConnectedSets, kModel.r, 18);
    benchmark::DoNotOptimize(rep.value);
  }
}
BENCHMARK(BM_hamiltonian);

void BM_resum_partial(benchmark::State& state) {
  const WrmParams p{0.3, 0.1, 0.5, 1.0};
  const auto omega = sampled(12.0, p.lambda_plus, p.lambda_minus, 37);
  VacuumOptions opts;
  opts.use_cache = false;
  const VacuumPotential phi(std::make_shared<TimeEvolvedWrmPremod>(p), opts);
  const Window lambda = Window::centered_box(2, 4.0);
  const auto sched = radii_schedule_wrm(p, 3, packing_attachment_bound(2));
  const auto grading = grade(omega, Ordering::cyclic(), sched);
  std::vector<Window> deltas;
  for (int m = 1; m <= 3; ++m)
    deltas.push_back(lambda.padded_box(sched.radius(m)));
  for (auto _ : state) {
    const auto rep = abs_sum_partial(phi, lambda, omega, grading, deltas,
                                     SupportFamily::ConnectedSets, p.r, 18);
    benchmark::DoNotOptimize(rep.partial_sums.back());
  }
}
BENCHMARK(BM_resum_partial);

void BM_sample_ppp(benchmark::State& state) {
  const Window w = Window::centered_box(2, 10.0);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const auto cfg = sample_marked_ppp(w, {2.0, 1.0}, ++seed);
    benchmark::DoNotOptimize(cfg.size());
  }
}
BENCHMARK(BM_sample_ppp);

void BM_phi_n(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(phi_n(n, 0.25, 1e-13).value);
}
BENCHMARK(BM_phi_n)->Arg(100)->Arg(10000);

void BM_kernel_apply(benchmark::State& state) {
  const auto rho = std::make_shared<TimeEvolvedWrmPremod>(kModel);
  const SpecificationKernel kernel(rho, {2.0, 1.0});
  const Window lambda = Window::centered_box(2, 2.0);
  const MarkedConfiguration boundary(lambda.padded_box(2.0), {});
  const Observable obs = Observable::count(lambda);
  KernelOptions opts;
  opts.n_samples = 200;
  opts.batches = 8;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const auto res = kernel.apply(lambda, obs, boundary, ++seed, opts);
    benchmark::DoNotOptimize(res.value);
  }
  state.SetItemsProcessed(state.iterations() * opts.n_samples);
}
BENCHMARK(BM_kernel_apply);

}  // namespace

BENCHMARK_MAIN();
