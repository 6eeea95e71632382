#include "topicsel/io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "topicsel/errors.hpp"

namespace topicsel {

namespace {

[[noreturn]] void parse_fail(const std::string& path, std::size_t line_no,
                             const std::string& what) {
  throw DataError(path + ":" + std::to_string(line_no) + ": " + what);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path + "' for reading");
  }
  return in;
}

std::string fmt_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

} // namespace

void write_corpus(const Corpus& corpus, const std::string& path) {
  auto out = open_out(path);
  out << corpus.vocab_size << ' ' << corpus.docs.size() << '\n';
  for (std::size_t d = 0; d < corpus.docs.size(); ++d) {
    for (const auto& tc : corpus.docs[d]) {
      out << d << ' ' << tc.term << ' ' << tc.count << '\n';
    }
  }
  if (!out) {
    throw IoError("write failure on '" + path + "'");
  }
}

Corpus read_corpus(const std::string& path) {
  auto in = open_in(path);
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) {
    parse_fail(path, 1, "missing 'V D' header");
  }
  ++line_no;
  std::uint64_t V = 0;
  std::uint64_t D = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> V >> D) || (hs >> extra)) {
      parse_fail(path, line_no, "malformed 'V D' header");
    }
  }
  if (V == 0) {
    parse_fail(path, line_no, "vocabulary size must be positive");
  }

  Corpus corpus;
  corpus.vocab_size = static_cast<std::uint32_t>(V);
  corpus.docs.resize(D);

  std::int64_t prev_doc = -1;
  std::int64_t prev_term = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      parse_fail(path, line_no, "blank line");
    }
    std::istringstream ls(line);
    std::int64_t doc = 0;
    std::int64_t term = 0;
    std::int64_t count = 0;
    std::string extra;
    if (!(ls >> doc >> term >> count) || (ls >> extra)) {
      parse_fail(path, line_no, "expected 'doc term count'");
    }
    if (doc < 0 || static_cast<std::uint64_t>(doc) >= D) {
      parse_fail(path, line_no, "document index out of range");
    }
    if (term < 0 || static_cast<std::uint64_t>(term) >= V) {
      parse_fail(path, line_no, "term index out of range");
    }
    if (count <= 0) {
      parse_fail(path, line_no, "count must be a positive integer");
    }
    if (doc < prev_doc || (doc == prev_doc && term <= prev_term)) {
      parse_fail(path, line_no, "entries must be sorted by doc then term, without duplicates");
    }
    prev_doc = doc;
    prev_term = term;
    corpus.docs[static_cast<std::size_t>(doc)].push_back(
        {static_cast<std::uint32_t>(term), static_cast<std::uint32_t>(count)});
  }
  return corpus;
}

void write_ground_truth(const GroundTruth& gt, const std::string& path) {
  auto out = open_out(path);
  out << gt.phi.rows() << ' ' << gt.phi.cols() << ' ' << fmt_real(gt.alpha0) << '\n';
  for (Eigen::Index k = 0; k < gt.alpha.size(); ++k) {
    out << "alpha " << k << ' ' << fmt_real(gt.alpha(k)) << '\n';
  }
  for (Eigen::Index i = 0; i < gt.phi.rows(); ++i) {
    for (Eigen::Index k = 0; k < gt.phi.cols(); ++k) {
      out << "phi " << i << ' ' << k << ' ' << fmt_real(gt.phi(i, k)) << '\n';
    }
  }
  if (!out) {
    throw IoError("write failure on '" + path + "'");
  }
}

GroundTruth read_ground_truth(const std::string& path) {
  auto in = open_in(path);
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) {
    parse_fail(path, 1, "missing 'V K alpha0' header");
  }
  ++line_no;
  std::int64_t V = 0;
  std::int64_t K = 0;
  double alpha0 = 0.0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> V >> K >> alpha0) || (hs >> extra)) {
      parse_fail(path, line_no, "malformed 'V K alpha0' header");
    }
  }
  if (V <= 0 || K <= 0) {
    parse_fail(path, line_no, "V and K must be positive");
  }

  GroundTruth gt;
  gt.alpha0 = alpha0;
  gt.alpha = Eigen::VectorXd::Zero(K);
  gt.phi = Eigen::MatrixXd::Zero(V, K);

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "alpha") {
      std::int64_t k = 0;
      double value = 0.0;
      std::string extra;
      if (!(ls >> k >> value) || (ls >> extra) || k < 0 || k >= K) {
        parse_fail(path, line_no, "malformed alpha line");
      }
      gt.alpha(k) = value;
    } else if (tag == "phi") {
      std::int64_t i = 0;
      std::int64_t k = 0;
      double value = 0.0;
      std::string extra;
      if (!(ls >> i >> k >> value) || (ls >> extra) || i < 0 || i >= V || k < 0 || k >= K) {
        parse_fail(path, line_no, "malformed phi line");
      }
      gt.phi(i, k) = value;
    } else {
      parse_fail(path, line_no, "unknown record tag '" + tag + "'");
    }
  }
  gt.validate();
  return gt;
}

void write_matrix(const Eigen::MatrixXd& m, const std::string& path) {
  auto out = open_out(path);
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0.0) {
        out << i << ' ' << j << ' ' << fmt_real(m(i, j)) << '\n';
      }
    }
  }
  if (!out) {
    throw IoError("write failure on '" + path + "'");
  }
}

Eigen::MatrixXd read_matrix(const std::string& path) {
  auto in = open_in(path);
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) {
    parse_fail(path, 1, "missing 'rows cols' header");
  }
  ++line_no;
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> rows >> cols) || (hs >> extra) || rows <= 0 || cols <= 0) {
      parse_fail(path, line_no, "malformed 'rows cols' header");
    }
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows, cols);
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::int64_t i = 0;
    std::int64_t j = 0;
    double value = 0.0;
    std::string extra;
    if (!(ls >> i >> j >> value) || (ls >> extra) || i < 0 || i >= rows || j < 0 || j >= cols) {
      parse_fail(path, line_no, "malformed matrix entry");
    }
    m(i, j) = value;
  }
  return m;
}

} // namespace topicsel
