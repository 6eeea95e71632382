#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace topicsel {

/// Parameters of a synthetic LDA corpus draw.
struct CorpusSpec {
  std::uint32_t vocab_size = 0;       // V
  std::uint32_t topic_count = 0;      // K
  std::uint32_t doc_count = 0;        // D
  std::uint32_t doc_length = 0;       // tokens per document, >= 2
  Eigen::VectorXd alpha;              // length K, entries > 0
  double beta0 = 0.0;                 // word-topic concentration, split as beta0/V
  std::uint64_t seed = 0;

  /// Symmetric document-topic prior: alpha_i = alpha0 / K.
  static CorpusSpec symmetric(std::uint32_t V, std::uint32_t K, std::uint32_t D,
                              std::uint32_t doc_length, double alpha0, double beta0,
                              std::uint64_t seed);

  void validate() const; // throws ParameterError
};

/// Latent parameters used to generate a corpus: word-topic matrix (columns
/// on the simplex) and topic-weight vector.
struct GroundTruth {
  Eigen::MatrixXd phi;    // V x K
  Eigen::VectorXd alpha;  // length K
  double alpha0 = 0.0;    // sum of alpha

  void validate() const; // throws ParameterError
};

/// One document's nonzero term counts, sorted by term index.
struct TermCount {
  std::uint32_t term;
  std::uint32_t count;
  friend bool operator==(const TermCount&, const TermCount&) = default;
};

/// Bag-of-words corpus: per-document sparse term counts.
struct Corpus {
  std::uint32_t vocab_size = 0;
  std::vector<std::vector<TermCount>> docs;

  std::uint32_t doc_tokens(std::size_t d) const;
  std::uint64_t total_tokens() const;
  friend bool operator==(const Corpus&, const Corpus&) = default;
};

/// Draws a full synthetic corpus: K topic columns ~ Dir(beta0/V, ..., beta0/V),
/// then per document h ~ Dir(alpha) and doc_length tokens via topic ~ Mult(h),
/// word ~ Mult(phi(topic)). Deterministic given spec.seed.
///
/// fixed_phi, when non-null, replaces the random topic draw with a caller
/// supplied V x K simplex-column matrix (deterministic oracle fixtures).
std::pair<Corpus, GroundTruth> generate_corpus(const CorpusSpec& spec,
                                               const Eigen::MatrixXd* fixed_phi = nullptr);

} // namespace topicsel
