#include "topicsel/selector.hpp"

#include <cmath>
#include <string>

#include "topicsel/errors.hpp"

namespace topicsel {

void BoundParams::validate() const {
  if (!(alpha0 > 0.0) || !(beta0 > 0.0) || !(c > 0.0)) {
    throw ParameterError("BoundParams: alpha0, beta0, c must be positive");
  }
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw ParameterError("BoundParams: epsilon must lie in (0, 1)");
  }
  if (V == 0) {
    throw ParameterError("BoundParams: V must be positive");
  }
}

double alpha_upper_bound(int k, double sigma_k, const BoundParams& p) {
  if (k < 1 || static_cast<std::uint32_t>(k) >= p.V) {
    throw ParameterError("alpha_upper_bound: requires 1 <= k < V");
  }
  if (sigma_k < 0.0) {
    throw ParameterError("alpha_upper_bound: sigma_k must be nonnegative");
  }
  const double v = static_cast<double>(p.V);
  return p.alpha0 * (p.alpha0 + 1.0) * p.c * p.beta0 * (v * k / (v - k)) * sigma_k;
}

EstimateReport estimate_topic_count(const MomentEstimates& m, const BoundParams& p) {
  p.validate();
  if (m.m1.size() != static_cast<Eigen::Index>(p.V)) {
    throw ParameterError("estimate_topic_count: BoundParams.V does not match the moment dimension");
  }

  const ShiftedMoment s = shifted_moment(m, p.alpha0);

  EstimateReport report;
  report.spectrum = singular_values(s.m12);
  report.threshold = 0.5 * p.epsilon * p.alpha0;

  // While-loop semantics: count consecutive k from 1 whose bound clears the
  // threshold; stop at the first failure (that bound is still reported).
  const int k_cap = static_cast<int>(p.V) - 1;
  int k = 1;
  for (; k <= k_cap; ++k) {
    const double bound_k = alpha_upper_bound(k, report.spectrum(k - 1), p);
    report.tilde_alpha.push_back(bound_k);
    if (bound_k > report.threshold) {
      report.k_hat = k;
    } else {
      break;
    }
  }
  report.stopped_at_cap = (k_cap >= 1 && report.k_hat == k_cap);

  for (int j = report.k_hat + 2; j <= k_cap; ++j) {
    if (alpha_upper_bound(j, report.spectrum(j - 1), p) > report.threshold) {
      report.recrossings.push_back(j);
    }
  }
  return report;
}

EstimateReport estimate_topic_count(const Corpus& corpus, const BoundParams& p) {
  if (corpus.vocab_size != p.V) {
    throw ParameterError("estimate_topic_count: BoundParams.V = " + std::to_string(p.V) +
                         " does not match corpus vocabulary " + std::to_string(corpus.vocab_size));
  }
  return estimate_topic_count(estimate_moments(corpus), p);
}

int refine_with_learned_phi(const EstimateReport& report, const Eigen::MatrixXd& phi_hat,
                            const ShiftedMoment& m12, const BoundParams& p) {
  p.validate();
  if (phi_hat.rows() != static_cast<Eigen::Index>(p.V)) {
    throw ParameterError("refine_with_learned_phi: phi_hat row count must equal V");
  }
  if (phi_hat.cols() != static_cast<Eigen::Index>(report.k_hat)) {
    throw ParameterError("refine_with_learned_phi: phi_hat must have k_hat columns");
  }
  const Eigen::MatrixXd pinv = full_rank_pseudo_inverse(phi_hat);
  const Eigen::VectorXd alpha_hat =
      (p.alpha0 * (p.alpha0 + 1.0) * (pinv * m12.m12 * pinv.transpose())).diagonal();
  const double threshold = 0.5 * p.epsilon * p.alpha0;
  int count = 0;
  for (Eigen::Index i = 0; i < alpha_hat.size(); ++i) {
    if (alpha_hat(i) > threshold) ++count;
  }
  return count;
}

} // namespace topicsel
