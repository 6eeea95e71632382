#include "topicsel/sampling.hpp"

#include <cmath>
#include <limits>

#include "topicsel/errors.hpp"

namespace topicsel {

double sample_normal(RngStream& rng) {
  for (;;) {
    const double u = 2.0 * rng.next_double() - 1.0;
    const double v = 2.0 * rng.next_double() - 1.0;
    const double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) {
      return u * std::sqrt(-2.0 * std::log(s) / s);
    }
  }
}

namespace {

// Marsaglia-Tsang (2000), shape >= 1, unit scale.
double gamma_marsaglia_tsang(double shape, RngStream& rng) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / (3.0 * std::sqrt(d));
  for (;;) {
    double x;
    double v;
    do {
      x = sample_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.next_double_open();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) {
      return d * v;
    }
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
      return d * v;
    }
  }
}

} // namespace

double sample_gamma(double shape, double scale, RngStream& rng) {
  if (!(shape > 0.0) || !(scale > 0.0)) {
    throw ParameterError("sample_gamma: shape and scale must be positive");
  }
  double g;
  if (shape < 1.0) {
    // Shape boost: if G ~ Gamma(shape+1) and U ~ Unif(0,1), then
    // G * U^{1/shape} ~ Gamma(shape).
    const double u = rng.next_double_open();
    g = gamma_marsaglia_tsang(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
  } else {
    g = gamma_marsaglia_tsang(shape, rng);
  }
  g *= scale;
  if (g < std::numeric_limits<double>::min()) {
    g = std::numeric_limits<double>::min();
  }
  return g;
}

Eigen::VectorXd sample_dirichlet(const Eigen::Ref<const Eigen::VectorXd>& beta, RngStream& rng) {
  if (beta.size() == 0) {
    throw ParameterError("sample_dirichlet: empty parameter vector");
  }
  if ((beta.array() <= 0.0).any()) {
    throw ParameterError("sample_dirichlet: all parameters must be positive");
  }
  Eigen::VectorXd v(beta.size());
  for (Eigen::Index i = 0; i < beta.size(); ++i) {
    v(i) = sample_gamma(beta(i), 1.0, rng);
  }
  return v / v.sum();
}

int sample_categorical(const Eigen::Ref<const Eigen::VectorXd>& p, RngStream& rng) {
  if (p.size() == 0) {
    throw ParameterError("sample_categorical: empty probability vector");
  }
  if ((p.array() < 0.0).any()) {
    throw ParameterError("sample_categorical: negative probability");
  }
  if (std::abs(p.sum() - 1.0) > 1e-6) {
    throw ParameterError("sample_categorical: probabilities do not sum to 1");
  }
  const double u = rng.next_double();
  double cum = 0.0;
  const Eigen::Index n = p.size();
  for (Eigen::Index i = 0; i < n - 1; ++i) {
    cum += p(i);
    if (u < cum) {
      return static_cast<int>(i);
    }
  }
  return static_cast<int>(n - 1);
}

} // namespace topicsel
