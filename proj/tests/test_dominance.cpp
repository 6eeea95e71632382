#include <cmath>

#include <doctest.h>

#include "topicsel/dominance.hpp"
#include "topicsel/errors.hpp"
#include "topicsel/sampling.hpp"
#include "topicsel/spectral.hpp"

using topicsel::dirichlet_sigma_bound;
using topicsel::DominanceTrialConfig;
using topicsel::gamma_coupling_check;
using topicsel::gamma_coupling_from;
using topicsel::monte_carlo_dominance;
using topicsel::ParameterError;
using topicsel::RngStream;

TEST_CASE("bound formula at V=100, K=50, beta0=10") {
  CHECK(dirichlet_sigma_bound(100, 50, 10.0, 1.0) ==
        doctest::Approx(0.031622776601683791).epsilon(1e-14));
}

TEST_CASE("bound scales linearly in c0") {
  CHECK(dirichlet_sigma_bound(100, 50, 10.0, 0.0) == 0.0);
  CHECK(dirichlet_sigma_bound(100, 50, 10.0, 2.0) ==
        doctest::Approx(2.0 * dirichlet_sigma_bound(100, 50, 10.0, 1.0)));
}

TEST_CASE("bound degenerates at K = V") {
  CHECK_THROWS_AS(dirichlet_sigma_bound(100, 100, 10.0, 1.0), ParameterError);
  CHECK_THROWS_AS(dirichlet_sigma_bound(100, 120, 10.0, 1.0), ParameterError);
}

TEST_CASE("coupling inequality holds on every draw") {
  RngStream rng(31);
  for (int i = 0; i < 50; ++i) {
    const auto c = gamma_coupling_check(50, 10, 10.0, rng);
    CHECK(c.sigma_phi >= c.coupled_lower);
  }
}

TEST_CASE("single-column coupling is tight") {
  Eigen::MatrixXd gamma(3, 1);
  gamma << 1.0, 2.0, 3.0;
  const auto c = gamma_coupling_from(gamma);
  const double expected = std::sqrt(14.0) / 6.0;
  CHECK(c.sigma_phi == doctest::Approx(expected).epsilon(1e-12));
  CHECK(c.coupled_lower == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("coupling quantities are scale invariant") {
  RngStream rng(32);
  Eigen::MatrixXd gamma(20, 4);
  for (Eigen::Index j = 0; j < 4; ++j) {
    for (Eigen::Index i = 0; i < 20; ++i) {
      gamma(i, j) = topicsel::sample_gamma(0.5, 2.0, rng);
    }
  }
  const auto a = gamma_coupling_from(gamma);
  const auto b = gamma_coupling_from((3.0 * gamma).eval());
  CHECK(a.sigma_phi == doctest::Approx(b.sigma_phi).epsilon(1e-12));
  CHECK(a.coupled_lower == doctest::Approx(b.coupled_lower).epsilon(1e-12));
}

TEST_CASE("dominance smoke run has no violations at c0 = 1") {
  DominanceTrialConfig cfg;
  cfg.V = 100;
  cfg.K = 10;
  cfg.beta0 = 10.0;
  cfg.trials = 500;
  cfg.c0 = 1.0;
  cfg.seed = 7;
  const auto res = monte_carlo_dominance(cfg, 2);
  CHECK(res.trials == 500);
  CHECK(res.violations == 0);
  CHECK(res.min_observed_sigma > res.bound_value);
}

TEST_CASE("pushing the bound above every observation flips all trials") {
  DominanceTrialConfig cfg;
  cfg.V = 100;
  cfg.K = 30;
  cfg.beta0 = 10.0;
  cfg.trials = 300;
  cfg.c0 = 1.0;
  cfg.seed = 8;
  const auto base = monte_carlo_dominance(cfg, 2);
  cfg.c0 = 10.0 * base.min_observed_sigma / base.bound_value;
  const auto flipped = monte_carlo_dominance(cfg, 2);
  CHECK(flipped.violations == flipped.trials);
}

TEST_CASE("a single trial reports zero or one violation") {
  DominanceTrialConfig cfg;
  cfg.V = 20;
  cfg.K = 5;
  cfg.beta0 = 10.0;
  cfg.trials = 1;
  cfg.c0 = 1.0;
  cfg.seed = 9;
  const auto res = monte_carlo_dominance(cfg);
  CHECK(res.trials == 1);
  CHECK(res.violations <= 1);
}

TEST_CASE("dominance results do not depend on the thread count") {
  DominanceTrialConfig cfg;
  cfg.V = 60;
  cfg.K = 12;
  cfg.beta0 = 5.0;
  cfg.trials = 200;
  cfg.c0 = 1.2;
  cfg.seed = 10;
  const auto one = monte_carlo_dominance(cfg, 1);
  const auto two = monte_carlo_dominance(cfg, 2);
  CHECK(one.violations == two.violations);
  CHECK(one.min_observed_sigma == two.min_observed_sigma);
}

TEST_CASE("capacity guard rejects oversized sweeps") {
  DominanceTrialConfig cfg;
  cfg.V = 4001;
  cfg.K = 4000;
  cfg.beta0 = 10.0;
  cfg.trials = 1;
  cfg.seed = 0;
  CHECK_THROWS_AS(monte_carlo_dominance(cfg), ParameterError);
  cfg.V = 100;
  cfg.K = 10;
  cfg.trials = 0;
  CHECK_THROWS_AS(monte_carlo_dominance(cfg), ParameterError);
}

TEST_CASE("distances from gamma vectors to random subspaces rarely fall near zero") {
  // Unit-variance entries: shape beta0/V = 0.1, scale sqrt(V/beta0).
  const std::uint32_t V = 200;
  const std::uint32_t K = 100;
  const double shape = 0.1;
  const double scale = std::sqrt(10.0);
  RngStream rng(33);
  const int draws = 1000;
  int close = 0;
  Eigen::MatrixXd w(V, K);
  Eigen::VectorXd x(V);
  for (int t = 0; t < draws; ++t) {
    for (Eigen::Index j = 0; j < w.cols(); ++j) {
      for (Eigen::Index i = 0; i < w.rows(); ++i) {
        w(i, j) = topicsel::sample_gamma(shape, scale, rng);
      }
    }
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      x(i) = topicsel::sample_gamma(shape, scale, rng);
    }
    if (topicsel::dist_to_span(x, w) < 0.1 * std::sqrt(static_cast<double>(V - K))) {
      ++close;
    }
  }
  CHECK(close / static_cast<double>(draws) < 0.05);
}
