#include "topicsel/dominance.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "topicsel/errors.hpp"
#include "topicsel/sampling.hpp"
#include "topicsel/spectral.hpp"

namespace topicsel {

double dirichlet_sigma_bound(std::uint32_t V, std::uint32_t K, double beta0, double c0) {
  if (K >= V) {
    throw ParameterError("dirichlet_sigma_bound: requires K < V (bound degenerates at K = V)");
  }
  if (!(beta0 > 0.0) || c0 < 0.0) {
    throw ParameterError("dirichlet_sigma_bound: beta0 must be positive, c0 nonnegative");
  }
  const double v = static_cast<double>(V);
  const double k = static_cast<double>(K);
  return c0 * std::sqrt((v - k) / (beta0 * v * k));
}

GammaCoupling gamma_coupling_from(const Eigen::MatrixXd& gamma) {
  if ((gamma.array() <= 0.0).any()) {
    throw ParameterError("gamma_coupling_from: entries must be positive");
  }
  const Eigen::Index K = gamma.cols();
  const Eigen::VectorXd colsum = gamma.colwise().sum();
  Eigen::MatrixXd phi = gamma;
  for (Eigen::Index j = 0; j < K; ++j) {
    phi.col(j) /= colsum(j);
  }
  GammaCoupling out;
  out.sigma_phi = singular_values(phi)(K - 1);
  out.coupled_lower = singular_values(gamma)(K - 1) / colsum.maxCoeff();
  return out;
}

GammaCoupling gamma_coupling_check(std::uint32_t V, std::uint32_t K, double beta0,
                                   RngStream& rng) {
  if (K > V) {
    throw ParameterError("gamma_coupling_check: requires K <= V");
  }
  const double shape = beta0 / static_cast<double>(V);
  const double theta = std::sqrt(static_cast<double>(V) / beta0);
  Eigen::MatrixXd gamma(V, K);
  for (Eigen::Index j = 0; j < gamma.cols(); ++j) {
    for (Eigen::Index i = 0; i < gamma.rows(); ++i) {
      gamma(i, j) = sample_gamma(shape, theta, rng);
    }
  }
  return gamma_coupling_from(gamma);
}

void DominanceTrialConfig::validate() const {
  if (V == 0 || K == 0 || K >= V) {
    throw ParameterError("DominanceTrialConfig: requires 0 < K < V");
  }
  if (!(beta0 > 0.0) || !(c0 > 0.0)) {
    throw ParameterError("DominanceTrialConfig: beta0 and c0 must be positive");
  }
  if (trials == 0) {
    throw ParameterError("DominanceTrialConfig: trials must be >= 1");
  }
  const std::uint64_t cells = static_cast<std::uint64_t>(V) * K;
  if (cells > 16'000'000ull || cells * trials > 2'000'000'000'000ull) {
    throw ParameterError("DominanceTrialConfig: V*K*trials exceeds capacity guard");
  }
}

DominanceResult monte_carlo_dominance(const DominanceTrialConfig& cfg, unsigned threads) {
  cfg.validate();
  const double bound = dirichlet_sigma_bound(cfg.V, cfg.K, cfg.beta0, cfg.c0);

  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, cfg.trials));

  std::vector<std::uint64_t> violations(threads, 0);
  std::vector<double> min_sigma(threads, std::numeric_limits<double>::infinity());
  std::atomic<std::uint64_t> next_trial{0};

  auto worker = [&](unsigned w) {
    const Eigen::VectorXd beta =
        Eigen::VectorXd::Constant(cfg.V, cfg.beta0 / static_cast<double>(cfg.V));
    Eigen::MatrixXd phi(cfg.V, cfg.K);
    for (;;) {
      const std::uint64_t t = next_trial.fetch_add(1, std::memory_order_relaxed);
      if (t >= cfg.trials) break;
      RngStream rng = RngStream::substream(cfg.seed, t);
      for (Eigen::Index k = 0; k < phi.cols(); ++k) {
        phi.col(k) = sample_dirichlet(beta, rng);
      }
      const double sigma = singular_values(phi)(cfg.K - 1);
      if (sigma <= bound) ++violations[w];
      min_sigma[w] = std::min(min_sigma[w], sigma);
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }

  DominanceResult res;
  res.trials = cfg.trials;
  res.bound_value = bound;
  res.min_observed_sigma = std::numeric_limits<double>::infinity();
  for (unsigned w = 0; w < threads; ++w) {
    res.violations += violations[w];
    res.min_observed_sigma = std::min(res.min_observed_sigma, min_sigma[w]);
  }
  return res;
}

} // namespace topicsel
