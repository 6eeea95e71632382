#include "topicsel/moments.hpp"

#include <cmath>
#include <string>

#include "topicsel/errors.hpp"
#include "topicsel/spectral.hpp"

namespace topicsel {

namespace {

void check_vocab_capacity(std::uint32_t V) {
  if (V > kMaxDenseVocab) {
    throw ParameterError("vocabulary size " + std::to_string(V) +
                         " exceeds dense second-moment capacity of " +
                         std::to_string(kMaxDenseVocab));
  }
}

} // namespace

void MomentEstimates::validate() const {
  if (m1.size() == 0 || m2.rows() != m1.size() || m2.cols() != m1.size()) {
    throw DataError("MomentEstimates: inconsistent dimensions");
  }
  if ((m1.array() < 0.0).any() || std::abs(m1.sum() - 1.0) > 1e-9) {
    throw DataError("MomentEstimates: m1 is not a probability vector");
  }
  if ((m2.array() < 0.0).any() || std::abs(m2.sum() - 1.0) > 1e-9) {
    throw DataError("MomentEstimates: m2 mass is not 1");
  }
  if ((m2 - m2.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw DataError("MomentEstimates: m2 is not symmetric");
  }
}

Eigen::VectorXd estimate_m1(const Corpus& corpus) {
  if (corpus.docs.empty()) {
    throw DataError("estimate_m1: empty corpus");
  }
  const auto V = static_cast<Eigen::Index>(corpus.vocab_size);
  Eigen::VectorXd m1 = Eigen::VectorXd::Zero(V);
  for (std::size_t d = 0; d < corpus.docs.size(); ++d) {
    const double n = static_cast<double>(corpus.doc_tokens(d));
    if (n == 0.0) {
      throw DataError("estimate_m1: document " + std::to_string(d) + " has no tokens");
    }
    for (const auto& tc : corpus.docs[d]) {
      m1(tc.term) += tc.count / n;
    }
  }
  return m1 / static_cast<double>(corpus.docs.size());
}

Eigen::MatrixXd estimate_m2(const Corpus& corpus, std::uint64_t* docs_used) {
  check_vocab_capacity(corpus.vocab_size);
  const auto V = static_cast<Eigen::Index>(corpus.vocab_size);
  Eigen::MatrixXd m2 = Eigen::MatrixXd::Zero(V, V);
  std::uint64_t used = 0;
  for (std::size_t d = 0; d < corpus.docs.size(); ++d) {
    const double n = static_cast<double>(corpus.doc_tokens(d));
    if (n < 2.0) continue;
    const double denom = n * (n - 1.0);
    const auto& doc = corpus.docs[d];
    for (const auto& a : doc) {
      for (const auto& b : doc) {
        m2(a.term, b.term) += static_cast<double>(a.count) * b.count / denom;
      }
      m2(a.term, a.term) -= a.count / denom;
    }
    ++used;
  }
  if (used == 0) {
    throw DataError("estimate_m2: no document has >= 2 tokens");
  }
  if (docs_used != nullptr) {
    *docs_used = used;
  }
  return m2 / static_cast<double>(used);
}

MomentEstimates estimate_moments(const Corpus& corpus) {
  MomentEstimates m;
  m.m1 = estimate_m1(corpus);
  m.m2 = estimate_m2(corpus, &m.doc_count_used);
  return m;
}

MomentEstimates exact_moments(const GroundTruth& gt) {
  gt.validate();
  check_vocab_capacity(static_cast<std::uint32_t>(gt.phi.rows()));
  const double a0 = gt.alpha0;
  MomentEstimates m;
  m.m1 = gt.phi * (gt.alpha / a0);
  // Dirichlet second moment: E[h h^T] = (alpha alpha^T + diag(alpha)) / (a0 (a0+1)).
  Eigen::MatrixXd ehh = gt.alpha * gt.alpha.transpose();
  ehh += Eigen::MatrixXd(gt.alpha.asDiagonal());
  ehh /= a0 * (a0 + 1.0);
  m.m2 = gt.phi * ehh * gt.phi.transpose();
  m.m2 = 0.5 * (m.m2 + m.m2.transpose()).eval();
  m.doc_count_used = 0;
  return m;
}

ShiftedMoment shifted_moment(const MomentEstimates& m, double alpha0) {
  if (!(alpha0 > 0.0)) {
    throw ParameterError("shifted_moment: alpha0 must be positive");
  }
  ShiftedMoment s;
  s.alpha0 = alpha0;
  s.m12 = m.m2 - (alpha0 / (alpha0 + 1.0)) * (m.m1 * m.m1.transpose());
  s.m12 = 0.5 * (s.m12 + s.m12.transpose()).eval();
  return s;
}

AlphaRecovery recover_alpha_oracle(const GroundTruth& gt, const ShiftedMoment& s) {
  gt.validate();
  const Eigen::MatrixXd pinv = full_rank_pseudo_inverse(gt.phi);
  const double a0 = s.alpha0;
  const Eigen::MatrixXd a = a0 * (a0 + 1.0) * (pinv * s.m12 * pinv.transpose());
  AlphaRecovery out;
  out.alpha = a.diagonal();
  const Eigen::Index K = a.rows();
  double off = 0.0;
  for (Eigen::Index i = 0; i < K; ++i) {
    for (Eigen::Index j = 0; j < K; ++j) {
      if (i != j) off = std::max(off, std::abs(a(i, j)));
    }
  }
  out.max_offdiagonal = off;
  return out;
}

} // namespace topicsel
