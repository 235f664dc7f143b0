// Command-line front end: sampling, cluster inspection, potential evaluation,
// regrouped sums, decay probes and kernel consistency checks.  Every output
// embeds a manifest (JSON object or CSV comment lines) naming the tool,
// version, seed and parameters that produced it.
//
// Exit codes: 0 success, 1 a requested check failed, 2 usage or runtime error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperpot/common.hpp"
#include "hyperpot/configuration.hpp"
#include "hyperpot/geometry.hpp"
#include "hyperpot/kernel.hpp"
#include "hyperpot/models.hpp"
#include "hyperpot/resum.hpp"
#include "hyperpot/sampling.hpp"
#include "hyperpot/serialize.hpp"
#include "hyperpot/series.hpp"
#include "hyperpot/vacuum.hpp"

namespace {

using hyperpot::MarkedConfiguration;
using hyperpot::Window;
using nlohmann::json;

struct WrmCli {
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  double r = 0.0;
  std::string t = "0.7";

  void attach(CLI::App* cmd) {
    cmd->add_option("--lambda-plus", lambda_plus, "plus-mark intensity")
        ->required();
    cmd->add_option("--lambda-minus", lambda_minus, "minus-mark intensity")
        ->required();
    cmd->add_option("--r", r, "hard-core radius (interaction threshold 2r)")
        ->required();
    cmd->add_option("--t", t, "spin-flip time, a number or 'inf'");
  }

  hyperpot::WrmParams params() const {
    hyperpot::WrmParams p;
    p.lambda_plus = lambda_plus;
    p.lambda_minus = lambda_minus;
    p.r = r;
    p.t = (t == "inf") ? hyperpot::kInf : std::stod(t);
    p.validate();
    return p;
  }
};

MarkedConfiguration read_config(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  // accept both a bare configuration and a manifest-wrapped tool output
  json parsed = json::parse(text);
  if (parsed.contains("configuration"))
    return hyperpot::configuration_from_json(parsed["configuration"].dump());
  return hyperpot::configuration_from_json(text);
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
  out << text << "\n";
}

json manifest_obj(const hyperpot::RunManifest& m) {
  return json::parse(hyperpot::manifest_to_json(m));
}

std::shared_ptr<const hyperpot::PreModification> make_model(
    const std::string& model, const WrmCli& wrm) {
  if (model == "poisson") return std::make_shared<hyperpot::PoissonPremod>();
  if (model == "hardcore")
    return std::make_shared<hyperpot::HardcoreWrmPremod>(wrm.r);
  if (model == "twrm")
    return std::make_shared<hyperpot::TimeEvolvedWrmPremod>(
        wrm.params(), hyperpot::SingleSite::Raw);
  if (model == "twrm-absorbed")
    return std::make_shared<hyperpot::TimeEvolvedWrmPremod>(
        wrm.params(), hyperpot::SingleSite::Absorbed);
  throw std::invalid_argument("unknown model: " + model);
}

hyperpot::SupportFamily parse_support(const std::string& s) {
  if (s == "connected") return hyperpot::SupportFamily::ConnectedSets;
  if (s == "pairs") return hyperpot::SupportFamily::Pairs;
  if (s == "all") return hyperpot::SupportFamily::AllSubsets;
  throw std::invalid_argument("unknown support family: " + s);
}

json value_or_inf(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

// ---------------------------------------------------------------------------

int run_sample(const std::string& window_spec, const WrmCli& wrm, bool evolve,
               std::uint64_t seed, const std::string& out_path) {
  const Window w = hyperpot::parse_window_spec(window_spec);
  const hyperpot::IntensitySpec intensities{wrm.lambda_plus, wrm.lambda_minus};
  MarkedConfiguration config = hyperpot::sample_marked_ppp(w, intensities, seed);
  if (evolve) {
    hyperpot::SpinFlipParams flip;
    flip.t = (wrm.t == "inf") ? hyperpot::kInf : std::stod(wrm.t);
    config = hyperpot::time_evolve_marks(config, flip, seed ^ 0x9e3779b97f4a7c15ull);
  }

  hyperpot::RunManifest m;
  m.tool = "sample";
  m.seed = seed;
  m.set("window", window_spec);
  m.set("lambda_plus", wrm.lambda_plus);
  m.set("lambda_minus", wrm.lambda_minus);
  if (evolve) m.set("t", wrm.t);

  json out;
  out["manifest"] = manifest_obj(m);
  out["configuration"] = json::parse(hyperpot::configuration_to_json(config));
  emit(out_path, out.dump(2));
  return 0;
}

int run_clusters(const std::string& config_path, double r,
                 const std::string& format, const std::string& out_path) {
  const MarkedConfiguration config = read_config(config_path);
  const auto decomp = hyperpot::cluster_decompose(config.positions(), r);

  hyperpot::RunManifest m;
  m.tool = "clusters";
  m.set("config", config_path);
  m.set("r", r);

  if (format == "csv") {
    std::ostringstream out;
    for (const auto& line : hyperpot::manifest_comment_lines(m)) out << line << "\n";
    out << "cluster,point,mark";
    for (int i = 0; i < config.dim(); ++i) out << ",x" << i;
    for (std::size_t c = 0; c < decomp.clusters.size(); ++c)
      for (int idx : decomp.clusters[c]) {
        out << "\n" << c << "," << idx << ","
            << hyperpot::mark_to_string(config[idx].mark);
        for (int i = 0; i < config.dim(); ++i) out << "," << config[idx].pos[i];
      }
    emit(out_path, out.str());
    return 0;
  }

  json out;
  out["manifest"] = manifest_obj(m);
  out["r"] = r;
  json clusters = json::array();
  for (const auto& cluster : decomp.clusters) {
    json entry;
    entry["points"] = cluster;
    int k = 0, l = 0;
    for (int idx : cluster)
      (config[idx].mark == hyperpot::kMarkPlus ? k : l)++;
    entry["plus"] = k;
    entry["minus"] = l;
    clusters.push_back(std::move(entry));
  }
  out["clusters"] = std::move(clusters);
  emit(out_path, out.dump(2));
  return 0;
}

int run_vacuum(const WrmCli& wrm, const std::string& model,
               const std::string& edge_path, const std::string& omega_path,
               int max_edge, const std::string& out_path) {
  const auto rho = make_model(model, wrm);
  hyperpot::VacuumOptions opts;
  opts.max_edge = max_edge;
  const hyperpot::VacuumPotential phi(rho, opts);

  const MarkedConfiguration eta = read_config(edge_path);
  double value;
  if (omega_path.empty()) {
    value = phi.phi(eta);
  } else {
    value = phi.phi(eta, read_config(omega_path));
  }

  hyperpot::RunManifest m;
  m.tool = "vacuum";
  m.set("model", rho->name());
  m.set("edge", edge_path);
  if (!omega_path.empty()) m.set("omega", omega_path);

  json out;
  out["manifest"] = manifest_obj(m);
  out["edge_size"] = eta.size();
  out["phi"] = value_or_inf(value);
  emit(out_path, out.dump(2));
  return 0;
}

int run_energy(const WrmCli& wrm, const std::string& model,
               const std::string& config_path, const std::string& lambda_spec,
               const std::string& delta_spec, const std::string& support_name,
               int cap, const std::string& out_path) {
  const auto rho = make_model(model, wrm);
  const hyperpot::VacuumPotential phi(rho);
  const MarkedConfiguration omega = read_config(config_path);
  const Window lambda = hyperpot::parse_window_spec(lambda_spec);
  const Window delta = hyperpot::parse_window_spec(delta_spec);
  const auto support = parse_support(support_name);

  const auto report =
      hyperpot::hamiltonian(phi, lambda, omega, delta, support, wrm.r, cap);

  hyperpot::RunManifest m;
  m.tool = "energy";
  m.set("model", rho->name());
  m.set("config", config_path);
  m.set("lambda", lambda_spec);
  m.set("delta", delta_spec);
  m.set("support", support_name);

  json out;
  out["manifest"] = manifest_obj(m);
  out["edge_sum"] = value_or_inf(report.value);
  out["closed_form"] = value_or_inf(report.closed_form);
  out["edges_enumerated"] = report.edges_enumerated;
  emit(out_path, out.dump(2));
  return 0;
}

int run_resum(const WrmCli& wrm, const std::string& config_path,
              const std::string& lambda_spec, const std::string& variant,
              int m_max, double K, double grid_step,
              const std::string& support_name, const std::string& out_path) {
  const auto p = wrm.params();
  const auto rho = std::make_shared<hyperpot::TimeEvolvedWrmPremod>(
      p, hyperpot::SingleSite::Absorbed);
  const hyperpot::VacuumPotential phi(rho);

  const MarkedConfiguration omega = read_config(config_path);
  const Window lambda = hyperpot::parse_window_spec(lambda_spec);
  const auto support = parse_support(support_name);

  hyperpot::Ordering ord;
  if (variant == "cyclic") {
    ord = hyperpot::Ordering::cyclic();
  } else if (variant == "ti") {
    ord = hyperpot::Ordering::lexicographic();
  } else {
    throw std::invalid_argument("variant must be cyclic or ti");
  }

  if (K <= 0.0) K = hyperpot::packing_attachment_bound(omega.dim());
  const auto schedule = hyperpot::radii_schedule_wrm(p, m_max, K, grid_step);
  const auto grading = hyperpot::grade(omega, ord, schedule);

  std::vector<Window> delta_seq;
  for (int m = 1; m <= m_max; ++m)
    delta_seq.push_back(lambda.padded_box(schedule.radius(m)));

  const auto report = hyperpot::abs_sum_partial(
      phi, lambda, omega, grading, delta_seq, support, p.r);

  hyperpot::RunManifest m;
  m.tool = "resum";
  m.set("config", config_path);
  m.set("lambda", lambda_spec);
  m.set("variant", variant);
  m.set("m_max", static_cast<long>(m_max));
  m.set("K", K);

  json out;
  out["manifest"] = manifest_obj(m);
  json radii = json::array();
  for (int i = 1; i <= m_max; ++i) radii.push_back(schedule.radius(i));
  out["radii"] = std::move(radii);
  json cells = json::array();
  for (const auto& cv : report.cells) {
    const auto& cell = grading.cells[static_cast<std::size_t>(cv.cell)];
    json entry;
    entry["anchor"] = cell.anchor;
    entry["m"] = cell.m;
    entry["members"] = cell.members;
    entry["psi"] = value_or_inf(cv.psi);
    entry["meets_lambda"] = cv.meets_lambda;
    entry["first_delta"] = cv.first_delta;
    cells.push_back(std::move(entry));
  }
  out["cells"] = std::move(cells);
  out["partial_sums"] = report.partial_sums;
  json per_index = json::array();
  for (const auto& [idx, total] : report.per_index) {
    json entry;
    entry["m"] = idx;
    entry["abs_sum"] = total;
    per_index.push_back(std::move(entry));
  }
  out["per_index"] = std::move(per_index);
  out["density_statistic"] = report.density_statistic;
  out["nondecreasing"] = report.nondecreasing;
  emit(out_path, out.dump(2));
  return 0;
}

int run_decay(const WrmCli& wrm, int n_max, int dim, int probes,
              std::uint64_t seed, double K, const std::string& out_path) {
  const auto p = wrm.params();
  const auto rho = std::make_shared<hyperpot::TimeEvolvedWrmPremod>(
      p, hyperpot::SingleSite::Absorbed);
  if (K <= 0.0) K = hyperpot::packing_attachment_bound(dim);

  hyperpot::RunManifest m;
  m.tool = "decay";
  m.seed = seed;
  m.set("n_max", static_cast<long>(n_max));
  m.set("dim", static_cast<long>(dim));
  m.set("probes", static_cast<long>(probes));
  m.set("K", K);

  std::ostringstream out;
  for (const auto& line : hyperpot::manifest_comment_lines(m)) out << line << "\n";
  out << "n,estimate,analytic_bound,within_bound";
  bool all_within = true;
  for (int n = 1; n <= n_max; ++n) {
    const auto probe_configs =
        hyperpot::wrm_kappa_probes(p, n, dim, probes, seed + static_cast<std::uint64_t>(n));
    const double bound = hyperpot::wrm_kappa_bound(p, n, K);
    const auto report = hyperpot::kappa_modulus(*rho, n, probe_configs, bound);
    const bool within = report.estimate <= bound;
    all_within = all_within && within;
    out << "\n" << n << "," << report.estimate << "," << bound << ","
        << (within ? 1 : 0);
  }
  emit(out_path, out.str());
  return all_within ? 0 : 1;
}

int run_dlr(const WrmCli& wrm, const std::string& lambda_spec,
            const std::string& delta_spec, long n_total, std::uint64_t seed,
            bool broken, double z_max, const std::string& obs_name,
            const std::string& out_path) {
  const auto p = wrm.params();
  const Window lambda = hyperpot::parse_window_spec(lambda_spec);
  const Window delta = hyperpot::parse_window_spec(delta_spec);

  std::shared_ptr<const hyperpot::PreModification> rho =
      std::make_shared<hyperpot::TimeEvolvedWrmPremod>(p, hyperpot::SingleSite::Raw);
  if (broken) {
    // probe region: a unit-side box at the center of lambda
    auto [lo, hi] = lambda.bounding_box();
    std::vector<double> plo(lo.size()), phi_(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) {
      const double c = 0.5 * (lo[i] + hi[i]);
      plo[i] = c - 0.5;
      phi_[i] = c + 0.5;
    }
    const double gate = 0.5 * (lambda.volume() + delta.volume());
    rho = std::make_shared<hyperpot::BrokenPremod>(
        rho, Window::box(plo, phi_), gate, std::log(2.0));
  }

  const hyperpot::SpinFlipParams flip{p.t};
  const hyperpot::IntensitySpec evolved = hyperpot::evolved_intensities(
      hyperpot::IntensitySpec{p.lambda_plus, p.lambda_minus}, flip);

  // boundary drawn once outside delta on a padded surrounding box
  const Window outer = delta.padded_box(4.0 * p.r + 1.0);
  const MarkedConfiguration boundary =
      hyperpot::sample_marked_ppp(outer, evolved, seed ^ 0xb0d7);

  hyperpot::Observable obs = hyperpot::Observable::count(lambda);
  if (obs_name == "vacancy") obs = hyperpot::Observable::vacancy(lambda);

  const auto report = hyperpot::dlr_consistency_check(
      rho, lambda, delta, evolved, obs, boundary, n_total, seed);

  hyperpot::RunManifest m;
  m.tool = "dlr";
  m.seed = seed;
  m.set("lambda", lambda_spec);
  m.set("delta", delta_spec);
  m.set("n_total", n_total);
  m.set("observable", obs_name);
  m.set("broken", broken ? "true" : "false");

  json out;
  out["manifest"] = manifest_obj(m);
  out["one_stage"] = report.one_stage;
  out["one_se"] = report.one_se;
  out["two_stage"] = report.two_stage;
  out["two_se"] = report.two_se;
  out["z"] = report.z;
  out["n_outer"] = report.n_outer;
  out["n_inner"] = report.n_inner;
  out["ess_outer"] = report.ess_outer;
  out["consistent"] = std::abs(report.z) < z_max;
  emit(out_path, out.dump(2));
  return std::abs(report.z) < z_max ? 0 : 1;
}

int run_check(std::uint64_t seed, int trials) {
  int failures = 0;
  auto report = [&](bool ok, const std::string& name, const std::string& detail) {
    std::cout << (ok ? "ok   " : "FAIL ") << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
  };

  hyperpot::WrmParams p;
  p.lambda_plus = 0.3;
  p.lambda_minus = 0.1;
  p.r = 0.25;
  p.t = 0.7;
  const hyperpot::IntensitySpec intens{p.lambda_plus, p.lambda_minus};
  const Window lambda = Window::centered_box(2, 2.0);
  const Window delta = Window::centered_box(2, 4.0);

  {
    const auto rho = std::make_shared<hyperpot::TimeEvolvedWrmPremod>(p);
    const auto swap =
        hyperpot::premod_swap_check(*rho, lambda, delta, intens, trials, seed);
    std::ostringstream d;
    d << "max residual " << swap.max_abs_residual;
    report(swap.pass, "swap identity (evolved model)", d.str());
  }
  {
    const auto rho = std::make_shared<hyperpot::HardcoreWrmPremod>(p.r);
    const auto swap = hyperpot::premod_swap_check(*rho, lambda, delta, intens,
                                                  trials, seed ^ 0x2);
    std::ostringstream d;
    d << swap.zero_pairs << " zero pairs";
    report(swap.pass, "swap identity (hard-core model)", d.str());
  }
  {
    const auto rho = std::make_shared<hyperpot::TimeEvolvedWrmPremod>(p);
    const hyperpot::VacuumPotential phi(rho);
    MarkedConfiguration omega;
    for (int attempt = 0;; ++attempt) {
      omega = hyperpot::sample_marked_ppp(lambda, intens,
                                          seed ^ (0x3000u + attempt));
      if (omega.size() >= 3 && omega.size() <= 10) break;
      if (attempt > 200) break;
    }
    const auto mob = hyperpot::mobius_reconstruct(phi, lambda, omega, 12);
    std::ostringstream d;
    d << "error " << mob.abs_error << " over " << mob.subsets << " subsets";
    report(mob.abs_error < 1e-9 && mob.subsets > 0, "subset-sum reconstruction",
           d.str());
  }
  {
    const auto ab = hyperpot::wrm_ab(p);
    const auto series = hyperpot::wrm_phi_series(2, 1, ab.a, ab.b);
    const double binom = hyperpot::wrm_phi_binomial(2, 1, ab.a, ab.b);
    std::ostringstream d;
    d << "series " << series.value << " binomial " << binom;
    report(std::abs(series.value - binom) < 1e-10,
           "coefficient series vs binomial", d.str());
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperedge potentials for marked Poisson point processes"};
  app.require_subcommand(1);
  std::function<int()> runner;

  // sample
  {
    auto* cmd = app.add_subcommand("sample", "draw a two-color Poisson sample");
    auto window_spec = std::make_shared<std::string>();
    auto wrm = std::make_shared<WrmCli>();
    auto seed = std::make_shared<std::uint64_t>(0);
    auto out = std::make_shared<std::string>();
    auto evolve = std::make_shared<bool>(false);
    cmd->add_option("--window", *window_spec, "window spec, box:... or ball:...")
        ->required();
    wrm->attach(cmd);
    cmd->add_flag("--evolve", *evolve, "apply the spin flip at time --t");
    cmd->add_option("--seed", *seed, "RNG seed")->required();
    cmd->add_option("--out", *out, "output file (default stdout)");
    cmd->callback([=, &runner]() {
      runner = [=]() {
        return run_sample(*window_spec, *wrm, *evolve, *seed, *out);
      };
    });
  }

  // clusters
  {
    auto* cmd = app.add_subcommand("clusters", "cluster decomposition of a configuration");
    auto config = std::make_shared<std::string>();
    auto r = std::make_shared<double>(0.0);
    auto format = std::make_shared<std::string>("json");
    auto out = std::make_shared<std::string>();
    cmd->add_option("--config", *config, "configuration JSON file, - for stdin")
        ->required();
    cmd->add_option("--r", *r, "hard-core radius (threshold 2r)")->required();
    cmd->add_option("--format", *format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", *out, "output file (default stdout)");
    cmd->callback([=, &runner]() {
      runner = [=]() { return run_clusters(*config, *r, *format, *out); };
    });
  }

  // vacuum
  {
    auto* cmd = app.add_subcommand("vacuum", "potential of one hyperedge");
    auto wrm = std::make_shared<WrmCli>();
    auto model = std::make_shared<std::string>("twrm");
    auto edge = std::make_shared<std::string>();
    auto omega = std::make_shared<std::string>();
    auto max_edge = std::make_shared<int>(20);
    auto out = std::make_shared<std::string>();
    wrm->attach(cmd);
    cmd->add_option("--model", *model, "twrm, twrm-absorbed, hardcore or poisson")
        ->check(CLI::IsMember({"twrm", "twrm-absorbed", "hardcore", "poisson"}));
    cmd->add_option("--edge", *edge, "hyperedge configuration JSON")->required();
    cmd->add_option("--omega", *omega,
                    "ambient configuration (default: the edge itself)");
    cmd->add_option("--max-edge", *max_edge, "largest admissible edge size");
    cmd->add_option("--out", *out, "output file (default stdout)");
    cmd->callback([=, &runner]() {
      runner = [=]() {
        return run_vacuum(*wrm, *model, *edge, *omega, *max_edge, *out);
      };
    });
  }

  // energy
  {
    auto* cmd = app.add_subcommand(
        "energy", "window energy: hyperedge sum against the closed form");
    auto wrm = std::make_shared<WrmCli>();
    auto model = std::make_shared<std::string>("twrm");
    auto config = std::make_shared<std::string>();
    auto lambda = std::make_shared<std::string>();
    auto delta = std::make_shared<std::string>();
    auto support = std::make_shared<std::string>("connected");
    auto cap = std::make_shared<int>(18);
    auto out = std::make_shared<std::string>();
    wrm->attach(cmd);
    cmd->add_option("--model", *model, "twrm, twrm-absorbed, hardcore or poisson")
        ->check(CLI::IsMember({"twrm", "twrm-absorbed", "hardcore", "poisson"}));
    cmd->add_option("--config", *config, "configuration JSON")->required();
    cmd->add_option("--lambda", *lambda, "inner window spec")->required();
    cmd->add_option("--delta", *delta, "truncation window spec")->required();
    cmd->add_option("--support", *support, "connected, pairs or all")
        ->check(CLI::IsMember({"connected", "pairs", "all"}));
    cmd->add_option("--cap", *cap, "hyperedge enumeration cap");
    cmd->add_option("--out", *out, "output file (default stdout)");
    cmd->callback([=, &runner]() {
      runner = [=]() {
        return run_energy(*wrm, *model, *config, *lambda, *delta, *support,
                          *cap, *out);
      };
    });
  }

  // resum
  {
    auto* cmd = app.add_subcommand(
        "resum", "regrouped cell values and absolute partial sums");
    auto wrm = std::make_shared<WrmCli>();
    auto config = std::make_shared<std::string>();
    auto lambda = std::make_shared<std::string>();
    auto variant = std::make_shared<std::string>("cyclic");
    auto m_max = std::make_shared<int>(5);
    auto K = std::make_shared<double>(0.0);
    auto grid = std::make_shared<double>(0.5);
    auto support = std::make_shared<std::string>("connected");
    auto out = std::make_shared<std::string>();
    wrm->attach(cmd);
    cmd->add_option("--config", *config, "configuration JSON")->required();
    cmd->add_option("--lambda", *lambda, "window spec")->required();
    cmd->add_option("--variant", *variant,
                    "cyclic (isotropic) or ti (translation-compatible)")
        ->check(CLI::IsMember({"cyclic", "ti"}));
    cmd->add_option("--m-max", *m_max, "number of annuli");
    cmd->add_option("--K", *K, "attachment bound (default: packing bound)");
    cmd->add_option("--grid-step", *grid, "radius grid step");
    cmd->add_option("--support", *support, "connected, pairs or all")
        ->check(CLI::IsMember({"connected", "pairs", "all"}));
    cmd->add_option("--out", *out, "output file (default stdout)");
    cmd->callback([=, &runner]() {
      runner = [=]() {
        return run_resum(*wrm, *config, *lambda, *variant, *m_max, *K, *grid,
                         *support, *out);
      };
    });
  }

  // decay
  {
    auto* cmd = app.add_subcommand(
        "decay", "truncation modulus probes against the analytic bound");
    auto wrm = std::make_shared<WrmCli>();
    auto n_max = std::make_shared<int>(10);
    auto dim = std::make_shared<int>(1);
    auto probes = std::make_shared<int>(8);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto K = std::make_shared<double>(0.0);
    auto out = std::make_shared<std::string>();
    wrm->attach(cmd);
    cmd->add_option("--n-max", *n_max, "largest truncation diameter");
    cmd->add_option("--dim", *dim, "dimension");
    cmd->add_option("--probes", *probes, "random probe configurations per n");
    cmd->add_option("--seed", *seed, "RNG seed")->required();
    cmd->add_option("--K", *K, "attachment bound (default: packing bound)");
    cmd->add_option("--out", *out, "output file (default stdout)");
    cmd->callback([=, &runner]() {
      runner = [=]() {
        return run_decay(*wrm, *n_max, *dim, *probes, *seed, *K, *out);
      };
    });
  }

  // dlr
  {
    auto* cmd = app.add_subcommand(
        "dlr", "kernel composition consistency (two-stage vs one-stage)");
    auto wrm = std::make_shared<WrmCli>();
    auto lambda = std::make_shared<std::string>();
    auto delta = std::make_shared<std::string>();
    auto n_total = std::make_shared<long>(40000);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto broken = std::make_shared<bool>(false);
    auto z_max = std::make_shared<double>(4.0);
    auto obs = std::make_shared<std::string>("count");
    auto out = std::make_shared<std::string>();
    wrm->attach(cmd);
    cmd->add_option("--lambda", *lambda, "inner window spec")->required();
    cmd->add_option("--delta", *delta, "outer window spec")->required();
    cmd->add_option("--n", *n_total, "total sample budget");
    cmd->add_option("--seed", *seed, "RNG seed")->required();
    cmd->add_flag("--broken", *broken,
                  "use the deliberately inconsistent family");
    cmd->add_option("--z-max", *z_max, "pass threshold on |z|");
    cmd->add_option("--observable", *obs, "count or vacancy")
        ->check(CLI::IsMember({"count", "vacancy"}));
    cmd->add_option("--out", *out, "output file (default stdout)");
    cmd->callback([=, &runner]() {
      runner = [=]() {
        return run_dlr(*wrm, *lambda, *delta, *n_total, *seed, *broken, *z_max,
                       *obs, *out);
      };
    });
  }

  // check
  {
    auto* cmd = app.add_subcommand("check", "fast structural self-checks");
    auto seed = std::make_shared<std::uint64_t>(0);
    auto trials = std::make_shared<int>(50);
    cmd->add_option("--seed", *seed, "RNG seed")->required();
    cmd->add_option("--trials", *trials, "trials per identity");
    cmd->callback([=, &runner]() {
      runner = [=]() { return run_check(*seed, *trials); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return runner ? runner() : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
