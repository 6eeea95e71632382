#pragma once

#include <utility>

#include <Eigen/Dense>

namespace topicsel {

/// Singular values in descending order.
using Spectrum = Eigen::VectorXd;

/// Full singular spectrum of a dense matrix, descending. Throws DataError
/// on non-finite entries.
Spectrum singular_values(const Eigen::MatrixXd& a);

/// Euclidean distance from x to the column span of w (rank-revealing QR).
/// A zero-column w gives ||x||.
double dist_to_span(const Eigen::VectorXd& x, const Eigen::MatrixXd& w);

/// Both sides of the negative-second-moment identity for a full-column-rank
/// matrix: lhs = sum_j sigma_j^-2, rhs = sum_j dist(col_j, span of the other
/// columns)^-2. Throws NumericalError if the matrix is rank deficient.
struct NegativeSecondMoment {
  double lhs = 0.0;
  double rhs = 0.0;
};

NegativeSecondMoment neg_second_moment_check(const Eigen::MatrixXd& a);

/// Moore-Penrose pseudoinverse; singular values below the numerical-rank
/// cutoff max(rows, cols) * sigma_1 * 1e-12 are treated as zero. rank,
/// when non-null, receives the number of retained directions.
Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& a, Eigen::Index* rank = nullptr);

/// pseudo_inverse that throws NumericalError unless a has full column rank.
Eigen::MatrixXd full_rank_pseudo_inverse(const Eigen::MatrixXd& a);

} // namespace topicsel
