#include <cmath>

#include <doctest.h>

#include "topicsel/errors.hpp"
#include "topicsel/rng.hpp"
#include "topicsel/sampling.hpp"
#include "topicsel/spectral.hpp"

using topicsel::dist_to_span;
using topicsel::neg_second_moment_check;
using topicsel::pseudo_inverse;
using topicsel::RngStream;
using topicsel::singular_values;

namespace {

Eigen::MatrixXd random_gaussian(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  RngStream rng(seed);
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      m(i, j) = topicsel::sample_normal(rng);
    }
  }
  return m;
}

} // namespace

TEST_CASE("spectrum of the identity") {
  const Eigen::VectorXd sv = singular_values(Eigen::MatrixXd::Identity(3, 3));
  for (int i = 0; i < 3; ++i) CHECK(sv(i) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("spectrum of a diagonal matrix") {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(3, 3);
  d.diagonal() << 3.0, 2.0, 1.0;
  const Eigen::VectorXd sv = singular_values(d);
  CHECK(sv(0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(sv(1) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sv(2) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("rectangular example with a known spectrum") {
  Eigen::MatrixXd a(3, 2);
  a << 0, 1,
       1, 0,
       1, 1;
  const Eigen::VectorXd sv = singular_values(a);
  CHECK(sv(0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(sv(1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("non-finite entries are rejected") {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2, 2);
  a(0, 0) = std::nan("");
  CHECK_THROWS_AS(singular_values(a), topicsel::DataError);
}

TEST_CASE("squared spectrum equals the eigenvalues of the gram matrix") {
  const Eigen::MatrixXd a = random_gaussian(20, 10, 42);
  const Eigen::VectorXd sv = singular_values(a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.transpose() * a);
  const Eigen::VectorXd ev = es.eigenvalues().reverse();
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    CHECK(sv(i) * sv(i) == doctest::Approx(ev(i)).epsilon(1e-9));
  }
}

TEST_CASE("distance to an orthogonal direction") {
  Eigen::VectorXd x(3);
  x << 1, 0, 0;
  Eigen::MatrixXd w(3, 1);
  w << 0, 1, 0;
  CHECK(dist_to_span(x, w) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("distance of a vector inside the span is zero") {
  const Eigen::MatrixXd w = random_gaussian(6, 3, 7);
  const Eigen::VectorXd x = w * Eigen::Vector3d(0.3, -1.2, 2.0);
  CHECK(dist_to_span(x, w) <= 1e-12);
}

TEST_CASE("distance leaves the residual coordinate") {
  Eigen::VectorXd x(3);
  x << 1, 1, 0;
  Eigen::MatrixXd w(3, 1);
  w << 1, 0, 0;
  CHECK(dist_to_span(x, w) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("distance to an empty span is the norm") {
  Eigen::VectorXd x(3);
  x << 3, 4, 0;
  CHECK(dist_to_span(x, Eigen::MatrixXd(3, 0)) == doctest::Approx(5.0));
}

TEST_CASE("negative second moment on orthogonal columns") {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2, 2);
  a(0, 0) = 2.0;
  a(1, 1) = 3.0;
  const auto r = neg_second_moment_check(a);
  CHECK(r.lhs == doctest::Approx(1.0 / 4.0 + 1.0 / 9.0).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(1.0 / 4.0 + 1.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("negative second moment on the identity") {
  const auto r = neg_second_moment_check(Eigen::MatrixXd::Identity(3, 3));
  CHECK(r.lhs == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("negative second moment identity on random matrices") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    RngStream rng(300 + i);
    const Eigen::Index K = 1 + static_cast<Eigen::Index>(rng.next_u64() % 30);
    const Eigen::Index V = K + static_cast<Eigen::Index>(rng.next_u64() % (51 - K));
    const Eigen::MatrixXd a = random_gaussian(V, K, 9000 + i);
    const auto r = neg_second_moment_check(a);
    CHECK(std::abs(r.lhs - r.rhs) / r.lhs < 1e-8);
  }
}

TEST_CASE("negative second moment rejects rank deficiency") {
  Eigen::MatrixXd a = random_gaussian(6, 3, 11);
  a.col(2) = a.col(0);
  CHECK_THROWS_AS(neg_second_moment_check(a), topicsel::NumericalError);
}

TEST_CASE("pseudoinverse inverts full-column-rank matrices") {
  const Eigen::MatrixXd a = random_gaussian(8, 3, 13);
  const Eigen::MatrixXd pinv = topicsel::full_rank_pseudo_inverse(a);
  CHECK((pinv * a - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("pseudoinverse reports the numerical rank") {
  Eigen::MatrixXd a = random_gaussian(8, 3, 14);
  a.col(2) = a.col(1);
  Eigen::Index rank = 0;
  pseudo_inverse(a, &rank);
  CHECK(rank == 2);
  CHECK_THROWS_AS(topicsel::full_rank_pseudo_inverse(a), topicsel::NumericalError);
}
