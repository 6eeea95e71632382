#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "topicsel/corpus.hpp"

namespace topicsel {

/// Dense vocabulary cap for the V x V second moment.
inline constexpr std::uint32_t kMaxDenseVocab = 4000;

/// Plug-in (or exact) first and second moments of the token distribution.
/// m1 is the expected term-probability vector, m2 the expected cross
/// correlation between two distinct tokens of one document.
struct MomentEstimates {
  Eigen::VectorXd m1;            // length V, nonnegative, sums to 1
  Eigen::MatrixXd m2;            // V x V, symmetric, nonnegative, total mass 1
  std::uint64_t doc_count_used = 0; // documents with >= 2 tokens (second moment)

  void validate() const; // throws DataError on invariant breach
};

/// Second moment minus the rank-one correction (alpha0/(alpha0+1)) m1 m1^T,
/// symmetrized. With exact moments this matrix has rank exactly K.
struct ShiftedMoment {
  Eigen::MatrixXd m12;
  double alpha0 = 0.0;
};

/// Per-document normalized counts, averaged over all documents.
Eigen::VectorXd estimate_m1(const Corpus& corpus);

/// Average of (C C^T - diag(C)) / (n(n-1)) over documents with n >= 2
/// tokens; shorter documents are skipped. docs_used, when non-null,
/// receives the number of qualifying documents.
Eigen::MatrixXd estimate_m2(const Corpus& corpus, std::uint64_t* docs_used = nullptr);

/// Both plug-in moments in one pass.
MomentEstimates estimate_moments(const Corpus& corpus);

/// Moments implied by ground truth: m1 = Phi alpha/alpha0 and
/// m2 = Phi E[h h^T] Phi^T with E[h h^T] = (alpha alpha^T + diag(alpha))
/// / (alpha0 (alpha0+1)).
MomentEstimates exact_moments(const GroundTruth& gt);

ShiftedMoment shifted_moment(const MomentEstimates& m, double alpha0);

/// Diagonal of alpha0(alpha0+1) pinv(Phi) m12 pinv(Phi)^T together with the
/// largest off-diagonal magnitude (diagnostic for how exactly the moment
/// identity closes).
struct AlphaRecovery {
  Eigen::VectorXd alpha;
  double max_offdiagonal = 0.0;
};

AlphaRecovery recover_alpha_oracle(const GroundTruth& gt, const ShiftedMoment& s);

} // namespace topicsel
