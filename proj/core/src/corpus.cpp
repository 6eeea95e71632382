#include "topicsel/corpus.hpp"

#include <cmath>

#include "topicsel/errors.hpp"
#include "topicsel/sampling.hpp"

namespace topicsel {

CorpusSpec CorpusSpec::symmetric(std::uint32_t V, std::uint32_t K, std::uint32_t D,
                                 std::uint32_t doc_length, double alpha0, double beta0,
                                 std::uint64_t seed) {
  CorpusSpec spec;
  spec.vocab_size = V;
  spec.topic_count = K;
  spec.doc_count = D;
  spec.doc_length = doc_length;
  spec.alpha = Eigen::VectorXd::Constant(K, alpha0 / static_cast<double>(K));
  spec.beta0 = beta0;
  spec.seed = seed;
  return spec;
}

void CorpusSpec::validate() const {
  if (vocab_size == 0 || topic_count == 0 || doc_count == 0) {
    throw ParameterError("CorpusSpec: V, K, D must be positive");
  }
  if (topic_count > vocab_size) {
    throw ParameterError("CorpusSpec: topic count exceeds vocabulary size");
  }
  if (doc_length < 2) {
    throw ParameterError("CorpusSpec: doc_length must be >= 2 (second-moment estimator needs n(n-1) > 0)");
  }
  if (alpha.size() != static_cast<Eigen::Index>(topic_count)) {
    throw ParameterError("CorpusSpec: alpha length must equal topic count");
  }
  if ((alpha.array() <= 0.0).any()) {
    throw ParameterError("CorpusSpec: alpha entries must be strictly positive");
  }
  if (!(beta0 > 0.0)) {
    throw ParameterError("CorpusSpec: beta0 must be positive");
  }
}

void GroundTruth::validate() const {
  if (phi.rows() == 0 || phi.cols() == 0 || alpha.size() != phi.cols()) {
    throw ParameterError("GroundTruth: inconsistent dimensions");
  }
  if ((phi.array() < 0.0).any()) {
    throw ParameterError("GroundTruth: phi has negative entries");
  }
  for (Eigen::Index k = 0; k < phi.cols(); ++k) {
    if (std::abs(phi.col(k).sum() - 1.0) > 1e-12) {
      throw ParameterError("GroundTruth: phi column off the simplex");
    }
  }
  if ((alpha.array() <= 0.0).any()) {
    throw ParameterError("GroundTruth: alpha entries must be positive");
  }
  if (std::abs(alpha.sum() - alpha0) > 1e-12) {
    throw ParameterError("GroundTruth: alpha0 does not match sum of alpha");
  }
}

std::uint32_t Corpus::doc_tokens(std::size_t d) const {
  std::uint32_t n = 0;
  for (const auto& tc : docs[d]) n += tc.count;
  return n;
}

std::uint64_t Corpus::total_tokens() const {
  std::uint64_t n = 0;
  for (std::size_t d = 0; d < docs.size(); ++d) n += doc_tokens(d);
  return n;
}

std::pair<Corpus, GroundTruth> generate_corpus(const CorpusSpec& spec,
                                               const Eigen::MatrixXd* fixed_phi) {
  spec.validate();
  const auto V = static_cast<Eigen::Index>(spec.vocab_size);
  const auto K = static_cast<Eigen::Index>(spec.topic_count);

  RngStream rng(spec.seed);

  GroundTruth gt;
  gt.alpha = spec.alpha;
  gt.alpha0 = spec.alpha.sum();
  if (fixed_phi != nullptr) {
    if (fixed_phi->rows() != V || fixed_phi->cols() != K) {
      throw ParameterError("generate_corpus: injected phi has wrong shape");
    }
    gt.phi = *fixed_phi;
  } else {
    const Eigen::VectorXd beta = Eigen::VectorXd::Constant(V, spec.beta0 / static_cast<double>(V));
    gt.phi.resize(V, K);
    for (Eigen::Index k = 0; k < K; ++k) {
      gt.phi.col(k) = sample_dirichlet(beta, rng);
    }
  }
  gt.validate();

  Corpus corpus;
  corpus.vocab_size = spec.vocab_size;
  corpus.docs.resize(spec.doc_count);

  std::vector<std::uint32_t> scratch(spec.vocab_size);
  for (std::uint32_t d = 0; d < spec.doc_count; ++d) {
    const Eigen::VectorXd h = sample_dirichlet(spec.alpha, rng);
    std::fill(scratch.begin(), scratch.end(), 0u);
    for (std::uint32_t t = 0; t < spec.doc_length; ++t) {
      const int z = sample_categorical(h, rng);
      const int w = sample_categorical(gt.phi.col(z), rng);
      ++scratch[static_cast<std::uint32_t>(w)];
    }
    auto& doc = corpus.docs[d];
    for (std::uint32_t v = 0; v < spec.vocab_size; ++v) {
      if (scratch[v] > 0) doc.push_back({v, scratch[v]});
    }
  }
  return {std::move(corpus), std::move(gt)};
}

} // namespace topicsel
