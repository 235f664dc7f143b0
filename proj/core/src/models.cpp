#include "hyperpot/models.hpp"

#include <cmath>
#include <stdexcept>

#include "hyperpot/common.hpp"

namespace hyperpot {

void WrmParams::validate() const {
  if (!(lambda_plus > 0.0) || !(lambda_minus > 0.0))
    throw std::invalid_argument("wrm intensities must be > 0");
  if (!(r > 0.0)) throw std::invalid_argument("wrm radius must be > 0");
  if (std::isnan(t) || t < 0.0)
    throw std::invalid_argument("wrm time must be >= 0 (or +inf)");
}

WrmAB wrm_ab(const WrmParams& p) {
  p.validate();
  const auto tm = transition_matrix(SpinFlipParams{p.t});
  const double same = tm[0][0];
  const double flip = tm[0][1];
  WrmAB out;
  if (flip == 0.0) {
    // t = 0: a = 0 and b diverges
    out.a = 0.0;
    out.b = 0.0;
    out.b_infinite = true;
    return out;
  }
  out.a = p.lambda_minus * flip / (p.lambda_plus * same);
  out.b = p.lambda_minus * same / (p.lambda_plus * flip);
  return out;
}

double critical_time(double lambda_plus, double lambda_minus) {
  if (!(lambda_plus > lambda_minus) || !(lambda_minus > 0.0))
    throw std::invalid_argument(
        "critical time needs lambda_plus > lambda_minus > 0");
  return -0.5 * std::log((lambda_plus - lambda_minus) / (lambda_plus + lambda_minus));
}

double wrm_b_of_t(double lambda_plus, double lambda_minus, double t) {
  WrmParams p{lambda_plus, lambda_minus, 1.0, t};
  const WrmAB ab = wrm_ab(p);
  return ab.b_infinite ? kInf : ab.b;
}

bool hardcore_indicator(const MarkedConfiguration& omega, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("hardcore radius must be > 0");
  const auto& pts = omega.points();
  const double thresh = 2.0 * r;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i].mark != pts[j].mark && dist2(pts[i].pos, pts[j].pos) < thresh)
        return false;
  return true;
}

namespace {

// log(1 + e^s), stable for either sign of s
double softplus(double s) {
  if (s > 0.0) return s + std::log1p(std::exp(-s));
  return std::log1p(std::exp(s));
}

// log(1 + a^k b^l) through log-space to survive large clusters
double log1p_cluster_weight(double log_a, double log_b, int k, int l) {
  return softplus(k * log_a + l * log_b);
}

}  // namespace

double wrm_log_premod(const Window& lambda, const MarkedConfiguration& omega,
                      const WrmParams& p, SingleSite convention) {
  const WrmAB ab = wrm_ab(p);
  if (ab.b_infinite)
    throw std::invalid_argument(
        "wrm_log_premod undefined at t = 0 (b diverges); use the hard-core family");
  const double log_a = std::log(ab.a);
  const double log_b = std::log(ab.b);

  auto kappa = [&](const std::vector<int>& members,
                   const MarkedConfiguration& cfg) {
    int k = 0, l = 0;
    for (int idx : members) {
      const Mark m = cfg[idx].mark;
      if (m == kMarkPlus) ++k;
      else if (m == kMarkMinus) ++l;
      else throw std::invalid_argument("wrm weight needs +/- marks");
    }
    return log1p_cluster_weight(log_a, log_b, k, l);
  };

  // log h_Lambda(omega)
  //   =  sum over components C of omega meeting Lambda      of  kappa(C)
  //   -  sum over components D of (C minus Lambda), C as above, of kappa(D)
  //   -  single-site terms of omega_Lambda (raw convention only).
  // The subtracted terms are the components of the exterior configuration
  // that interior points weld together; without them the ratio
  // h_Delta / h_Lambda picks up a spurious dependence on the interior and
  // the family stops being consistent across windows.
  const auto decomp = cluster_decompose(omega.positions(), p.r);
  KahanAccumulator acc;
  for (const auto& cluster : decomp.clusters) {
    bool meets = false;
    for (int idx : cluster)
      if (lambda.contains(omega[idx].pos)) {
        meets = true;
        break;
      }
    if (!meets) continue;
    acc.add(kappa(cluster, omega));

    std::vector<int> outside;
    for (int idx : cluster)
      if (!lambda.contains(omega[idx].pos)) outside.push_back(idx);
    if (outside.empty()) continue;
    std::vector<Point> outside_pos;
    outside_pos.reserve(outside.size());
    for (int idx : outside) outside_pos.push_back(omega[idx].pos);
    const auto sub = cluster_decompose(outside_pos, p.r);
    for (const auto& part : sub.clusters) {
      std::vector<int> members;
      members.reserve(part.size());
      for (int local : part) members.push_back(outside[static_cast<std::size_t>(local)]);
      acc.add(-kappa(members, omega));
    }
  }
  if (convention == SingleSite::Raw) {
    const auto inside = omega.restricted_to(lambda);
    acc.add(-static_cast<double>(inside.count_plus()) * std::log1p(ab.a));
    acc.add(-static_cast<double>(inside.count_minus()) * std::log1p(ab.b));
  }
  return acc.value();
}

double cluster_potential_psi(const MarkedConfiguration& eta,
                             const MarkedConfiguration& omega,
                             const WrmParams& p) {
  const WrmAB ab = wrm_ab(p);
  if (ab.b_infinite)
    throw std::invalid_argument("cluster potential undefined at t = 0");
  if (eta.empty()) return 0.0;
  const auto decomp = cluster_decompose(omega.positions(), p.r);

  // locate eta's points inside omega; all must sit in one common cluster
  // that they exhaust, otherwise eta is not a cluster of omega
  int cluster_id = -1;
  for (const auto& mp : eta.points()) {
    auto idx = omega.find(mp);
    if (!idx) return 0.0;
    const int cid = decomp.label[static_cast<std::size_t>(*idx)];
    if (cluster_id < 0) cluster_id = cid;
    else if (cid != cluster_id) return 0.0;
  }
  if (static_cast<int>(decomp.clusters[static_cast<std::size_t>(cluster_id)].size()) !=
      eta.size())
    return 0.0;

  const int k = eta.count_plus();
  const int l = eta.count_minus();
  return softplus(k * std::log(ab.a) + l * std::log(ab.b));
}

HardcoreWrmPremod::HardcoreWrmPremod(double r) : r_(r) {
  if (!(r > 0.0)) throw std::invalid_argument("hardcore radius must be > 0");
}

double HardcoreWrmPremod::log_weight(const Window&,
                                     const MarkedConfiguration& omega) const {
  // no window dependence: the indicator acts on the whole configuration
  return hardcore_indicator(omega, r_) ? 0.0 : -kInf;
}

TimeEvolvedWrmPremod::TimeEvolvedWrmPremod(WrmParams params, SingleSite convention)
    : params_(params), ab_(wrm_ab(params)), convention_(convention) {
  if (ab_.b_infinite)
    throw std::invalid_argument(
        "evolved weight family needs t > 0; at t = 0 use HardcoreWrmPremod");
}

double TimeEvolvedWrmPremod::log_weight(const Window& lambda,
                                        const MarkedConfiguration& omega) const {
  return wrm_log_premod(lambda, omega, params_, convention_);
}

std::string TimeEvolvedWrmPremod::name() const {
  return convention_ == SingleSite::Raw ? "twrm" : "twrm-absorbed";
}

PairFunction PairFunction::zero() {
  PairFunction f;
  f.f_ = [](const Point&) { return 0.0; };
  f.support_ = 0.0;
  return f;
}

PairFunction PairFunction::hard_core(double R) {
  if (!(R > 0.0)) throw std::invalid_argument("hard core radius must be > 0");
  PairFunction f;
  f.f_ = [R](const Point& d) { return norm2(d) < R ? kInf : 0.0; };
  f.support_ = R;
  return f;
}

PairFunction PairFunction::radial_step(double R, double v) {
  if (!(R > 0.0)) throw std::invalid_argument("step radius must be > 0");
  PairFunction f;
  f.f_ = [R, v](const Point& d) { return norm2(d) < R ? v : 0.0; };
  f.support_ = R;
  return f;
}

PairFunction PairFunction::custom(std::function<double(const Point&)> f,
                                  std::optional<double> support_radius) {
  if (!f) throw std::invalid_argument("custom pair function must be callable");
  PairFunction out;
  out.f_ = std::move(f);
  out.support_ = support_radius;
  return out;
}

double potts_pair_potential(const MarkedPoint& x, const MarkedPoint& y,
                            const PottsParams& p) {
  const Point d = x.pos - y.pos;
  double v = p.psi(d);
  if (x.mark != y.mark) v += p.phi(d);
  return v;
}

PottsPremod::PottsPremod(PottsParams params) : params_(std::move(params)) {}

double PottsPremod::log_weight(const Window& lambda,
                               const MarkedConfiguration& omega) const {
  const auto& pts = omega.points();
  KahanAccumulator acc;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (!lambda.contains(pts[i].pos) && !lambda.contains(pts[j].pos)) continue;
      const double v = potts_pair_potential(pts[i], pts[j], params_);
      if (std::isinf(v) && v > 0.0) return -kInf;
      acc.add(-v);
    }
  }
  return acc.value();
}

std::optional<double> PottsPremod::range() const {
  const auto a = params_.phi.support_radius();
  const auto b = params_.psi.support_radius();
  if (a && b) return std::max(*a, *b);
  return std::nullopt;
}

BrokenPremod::BrokenPremod(std::shared_ptr<const PreModification> base,
                           Window probe, double volume_gate, double strength)
    : base_(std::move(base)),
      probe_(std::move(probe)),
      volume_gate_(volume_gate),
      strength_(strength) {
  if (!base_) throw std::invalid_argument("broken family needs a base family");
}

double BrokenPremod::log_weight(const Window& lambda,
                                const MarkedConfiguration& omega) const {
  double v = base_->log_weight(lambda, omega);
  if (lambda.volume() > volume_gate_) {
    bool occupied = false;
    for (const auto& mp : omega.points()) {
      if (probe_.contains(mp.pos) && lambda.contains(mp.pos)) {
        occupied = true;
        break;
      }
    }
    if (occupied) v += strength_;
  }
  return v;
}

}  // namespace hyperpot
