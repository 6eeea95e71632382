#pragma once

#include <Eigen/Dense>

#include "topicsel/rng.hpp"

namespace topicsel {

/// Standard normal variate (Marsaglia polar method).
double sample_normal(RngStream& rng);

/// Gamma(shape, scale) variate, strictly positive.
///
/// Marsaglia-Tsang squeeze rejection for shape >= 1; for shape < 1 the
/// draw is boosted (sample at shape+1, multiply by U^{1/shape}), which
/// stays efficient down to the tiny shapes this model uses (beta0/V can
/// be 0.1 or less). A draw that underflows to exactly 0 is clamped to
/// the smallest positive normal double so later normalizations stay
/// finite.
double sample_gamma(double shape, double scale, RngStream& rng);

/// Dirichlet(beta) variate: independent Gamma(beta_i, 1) draws, normalized.
/// Entries are nonnegative and sum to 1 within 1e-12.
Eigen::VectorXd sample_dirichlet(const Eigen::Ref<const Eigen::VectorXd>& beta, RngStream& rng);

/// Index i with probability p(i), by cumulative-sum inversion; the last
/// index absorbs rounding slack. p must be entrywise >= 0 with total
/// mass within 1e-6 of 1.
int sample_categorical(const Eigen::Ref<const Eigen::VectorXd>& p, RngStream& rng);

} // namespace topicsel
