#ifndef HYPERPOT_VACUUM_HPP
#define HYPERPOT_VACUUM_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperpot/configuration.hpp"
#include "hyperpot/models.hpp"

namespace hyperpot {

struct VacuumOptions {
  /// Largest hyperedge size the subset inclusion-exclusion will accept.
  int max_edge = 20;
  /// Evaluate each value at two distinct enclosing volumes and require
  /// agreement; catches weight families with spurious volume dependence.
  bool check_volume_independence = false;
  bool use_cache = true;
  double volume_independence_tol = 1e-10;
};

/// Hyperedge potential extracted from a weight family by subset
/// inclusion-exclusion against the empty configuration:
///   phi(eta, omega) = - sum_{xi subset of eta} (-1)^{|eta \ xi|}
///                       [log h_L(omega_xi) - log h_L(empty)],
/// +infinity when the weight of omega_eta vanishes.  The value does not
/// depend on the choice of enclosing volume L, and vanishes whenever omega
/// misses a point of eta (vacuum normalization); both are checked by tests
/// rather than assumed.
class VacuumPotential {
public:
  explicit VacuumPotential(std::shared_ptr<const PreModification> rho,
                           VacuumOptions opts = {});

  /// phi(eta, eta): the hyperedge evaluated in its own support.
  double phi(const MarkedConfiguration& eta) const;
  /// phi(eta, omega): omega enters only through which points of eta it
  /// carries (matched bit-exactly).
  double phi(const MarkedConfiguration& eta, const MarkedConfiguration& omega) const;
  /// Same, at an explicit enclosing volume (must contain eta).
  double phi_at_window(const MarkedConfiguration& eta,
                       const MarkedConfiguration& omega,
                       const Window& lambda) const;

  const PreModification& premod() const { return *rho_; }
  const VacuumOptions& options() const { return opts_; }

private:
  double phi_impl(const std::vector<MarkedPoint>& eta,
                  const std::vector<bool>& present, const Window& lambda) const;

  std::shared_ptr<const PreModification> rho_;
  VacuumOptions opts_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<std::string, double> cache_;
};

enum class SupportFamily {
  ConnectedSets,  // subsets that are < 2r connected on their own
  Pairs,          // singletons and pairs
  AllSubsets      // full subset lattice (size-capped)
};

struct EdgeContribution {
  std::vector<int> indices;  // into the restricted configuration omega_Delta
  double value = 0.0;
};

struct HamiltonianReport {
  double value = 0.0;        // hyperedge sum
  double closed_form = 0.0;  // -log( h_L(omega_Delta) / h_L(omega_{Delta minus L}) )
  std::vector<EdgeContribution> contributions;
  int edges_enumerated = 0;
};

/// Energy of omega in lambda relative to delta-truncated surroundings:
/// the sum of phi over hyperedges eta of omega_Delta with eta meeting
/// lambda, enumerated over the declared support family.  connect_r is the
/// hard-core radius for SupportFamily::ConnectedSets: points closer than
/// 2 * connect_r are linked, matching cluster_decompose.  The closed form
/// is evaluated independently through the weight family.
HamiltonianReport hamiltonian(const VacuumPotential& phi, const Window& lambda,
                              const MarkedConfiguration& omega, const Window& delta,
                              SupportFamily support, double connect_r = 0.0,
                              int cap = 18, bool keep_contributions = false);

struct MobiusReport {
  double edge_sum = 0.0;    // sum of phi over all subsets of omega_Lambda
  double weight_form = 0.0; // -log( h_L(omega_Lambda) / h_L(empty) )
  double abs_error = 0.0;
  int subsets = 0;
};

/// Reconstruction identity: summing the potential over the full subset
/// lattice of omega_Lambda recovers the log-weight of omega_Lambda.
MobiusReport mobius_reconstruct(const VacuumPotential& phi, const Window& lambda,
                                const MarkedConfiguration& omega, int cap = 14);

struct FiniteRangeReport {
  int trials = 0;
  int applicable = 0;   // eta with a pair beyond the range and positive weight
  int zero_branch = 0;  // eta skipped because its own weight vanishes
  double max_abs_phi = 0.0;
  bool pass = true;
  std::optional<MarkedConfiguration> witness;
};

/// Samples hyperedges containing a pair of points farther apart than `range`
/// and checks phi = 0 on them (within tol).  Hyperedges whose own weight
/// vanishes fall in the +infinity branch of the definition and are excluded
/// (counted separately).
FiniteRangeReport check_finite_range(const VacuumPotential& phi, double range,
                                     int dim, int trials, std::uint64_t seed,
                                     double tol = 1e-10);

}  // namespace hyperpot

#endif  // HYPERPOT_VACUUM_HPP
