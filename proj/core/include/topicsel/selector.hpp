#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "topicsel/corpus.hpp"
#include "topicsel/moments.hpp"
#include "topicsel/spectral.hpp"

namespace topicsel {

/// Hyperparameters of the model-order estimate.
struct BoundParams {
  double alpha0 = 1.0;
  double beta0 = 0.0;
  double epsilon = 0.0;   // relevance threshold, in (0, 1)
  double c = 1.0;         // dominance constant
  std::uint32_t V = 0;

  void validate() const;
};

/// Result of the estimate: the count of relevant topics, the bound values
/// examined, and the full spectrum of the shifted moment they came from.
struct EstimateReport {
  int k_hat = 0;
  std::vector<double> tilde_alpha;   // bound values for k = 1..k_max examined
  Spectrum spectrum;                 // full singular spectrum of m12
  double threshold = 0.0;            // epsilon/2 * alpha0
  bool stopped_at_cap = false;       // loop reached k = V-1 still above threshold
  std::vector<int> recrossings;      // later k whose bound re-crosses the threshold
};

/// Topic-weight upper bound alpha0(alpha0+1) c beta0 (V k)/(V-k) sigma_k.
double alpha_upper_bound(int k, double sigma_k, const BoundParams& p);

/// Counts relevant topics from a corpus: plug-in moments, shifted second
/// moment, one full singular decomposition, then the largest prefix of
/// indices k whose bound value exceeds the relevance threshold. Bound
/// values past the stopping index that rise back above the threshold are
/// reported as diagnostics and do not change k_hat.
EstimateReport estimate_topic_count(const Corpus& corpus, const BoundParams& p);

/// Same procedure starting from precomputed moments (exact-moment fixtures).
EstimateReport estimate_topic_count(const MomentEstimates& m, const BoundParams& p);

/// Refinement step for an externally learned word-topic matrix: recovers
/// alpha through the moment identity and counts entries above the relevance
/// threshold. phi_hat must be V x k_hat with full column rank.
int refine_with_learned_phi(const EstimateReport& report, const Eigen::MatrixXd& phi_hat,
                            const ShiftedMoment& m12, const BoundParams& p);

} // namespace topicsel
