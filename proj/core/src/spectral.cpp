#include "topicsel/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "topicsel/errors.hpp"

namespace topicsel {

Spectrum singular_values(const Eigen::MatrixXd& a) {
  if (!a.allFinite()) {
    throw DataError("singular_values: matrix has non-finite entries");
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a);
  return svd.singularValues();
}

double dist_to_span(const Eigen::VectorXd& x, const Eigen::MatrixXd& w) {
  if (!x.allFinite() || !w.allFinite()) {
    throw DataError("dist_to_span: non-finite entries");
  }
  if (w.cols() == 0) {
    return x.norm();
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(w);
  const Eigen::Index r = qr.rank();
  if (r == 0) {
    return x.norm();
  }
  const Eigen::MatrixXd q =
      qr.householderQ() * Eigen::MatrixXd::Identity(w.rows(), r);
  return (x - q * (q.transpose() * x)).norm();
}

NegativeSecondMoment neg_second_moment_check(const Eigen::MatrixXd& a) {
  const Eigen::Index K = a.cols();
  const Spectrum sv = singular_values(a);
  const double cutoff =
      static_cast<double>(std::max(a.rows(), a.cols())) * sv(0) * 1e-12;
  if (sv(K - 1) <= cutoff) {
    throw NumericalError("neg_second_moment_check: rank-deficient matrix");
  }
  NegativeSecondMoment out;
  for (Eigen::Index j = 0; j < K; ++j) {
    out.lhs += 1.0 / (sv(j) * sv(j));
  }
  Eigen::MatrixXd rest(a.rows(), K - 1);
  for (Eigen::Index j = 0; j < K; ++j) {
    Eigen::Index c = 0;
    for (Eigen::Index i = 0; i < K; ++i) {
      if (i != j) rest.col(c++) = a.col(i);
    }
    const double d = dist_to_span(a.col(j), rest);
    out.rhs += 1.0 / (d * d);
  }
  return out;
}

Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& a, Eigen::Index* rank) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cutoff =
      static_cast<double>(std::max(a.rows(), a.cols())) * sv(0) * 1e-12;
  Eigen::VectorXd inv(sv.size());
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) {
      inv(i) = 1.0 / sv(i);
      ++r;
    } else {
      inv(i) = 0.0;
    }
  }
  if (rank != nullptr) {
    *rank = r;
  }
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

Eigen::MatrixXd full_rank_pseudo_inverse(const Eigen::MatrixXd& a) {
  Eigen::Index rank = 0;
  Eigen::MatrixXd pinv = pseudo_inverse(a, &rank);
  if (rank < a.cols()) {
    throw NumericalError("pseudoinverse cutoff reached: matrix is numerically rank deficient");
  }
  return pinv;
}

} // namespace topicsel
