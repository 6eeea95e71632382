#pragma once

#include <string>

#include <Eigen/Dense>

#include "topicsel/corpus.hpp"

namespace topicsel {

// Line-oriented text formats. Corpus: header "V D", then one line
// "doc term count" per nonzero, 0-based, sorted by doc then term.
// Ground truth: header "V K alpha0", then "alpha <k> <value>" and
// "phi <i> <k> <value>" lines. Matrices: header "rows cols", then
// "i j value" per nonzero. Reals carry 17 significant digits.

void write_corpus(const Corpus& corpus, const std::string& path);
Corpus read_corpus(const std::string& path);

void write_ground_truth(const GroundTruth& gt, const std::string& path);
GroundTruth read_ground_truth(const std::string& path);

void write_matrix(const Eigen::MatrixXd& m, const std::string& path);
Eigen::MatrixXd read_matrix(const std::string& path);

} // namespace topicsel
