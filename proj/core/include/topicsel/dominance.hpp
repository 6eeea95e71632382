#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "topicsel/rng.hpp"

namespace topicsel {

/// Lower-bound value c0 * sqrt((V-K) / (beta0 V K)) for the least singular
/// value of a V x K symmetric-Dirichlet random matrix. Degenerate at K >= V.
double dirichlet_sigma_bound(std::uint32_t V, std::uint32_t K, double beta0, double c0);

/// One draw of the Gamma/Dirichlet coupling: a V x K matrix with i.i.d.
/// Gamma(beta0/V, sqrt(V/beta0)) entries, its column-normalized Dirichlet
/// counterpart, and the two sides of the per-draw inequality
/// sigma_K(Phi) >= sigma_K(Gamma) / max_j colsum_j(Gamma).
struct GammaCoupling {
  double sigma_phi = 0.0;
  double coupled_lower = 0.0;
};

GammaCoupling gamma_coupling_check(std::uint32_t V, std::uint32_t K, double beta0,
                                   RngStream& rng);

/// Coupling computed from a caller-supplied Gamma matrix (entries > 0).
GammaCoupling gamma_coupling_from(const Eigen::MatrixXd& gamma);

struct DominanceTrialConfig {
  std::uint32_t V = 0;
  std::uint32_t K = 0;        // K < V
  double beta0 = 0.0;
  std::uint64_t trials = 0;
  double c0 = 1.0;
  std::uint64_t seed = 0;

  void validate() const;
};

struct DominanceResult {
  std::uint64_t violations = 0;
  std::uint64_t trials = 0;
  double min_observed_sigma = 0.0;
  double bound_value = 0.0;
};

/// Draws cfg.trials independent V x K matrices with i.i.d. symmetric
/// Dirichlet(beta0/V) columns and counts trials whose least singular value
/// falls at or below dirichlet_sigma_bound. Trial t uses the substream
/// (cfg.seed, t), so results are identical for any thread count
/// (threads = 0 means hardware concurrency).
DominanceResult monte_carlo_dominance(const DominanceTrialConfig& cfg,
                                      unsigned threads = 0);

} // namespace topicsel
