#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "topicsel/corpus.hpp"
#include "topicsel/selector.hpp"

namespace topicsel {

/// Sweep configuration: for each K in [k_min, k_max], corpora_per_k corpora
/// are generated and the topic count re-estimated from their moments alone.
struct BenchConfig {
  std::uint32_t V = 100;
  std::uint32_t D = 1000;
  std::uint32_t doc_length = 10;
  std::uint32_t k_min = 5;
  std::uint32_t k_max = 25;
  std::uint32_t corpora_per_k = 10;
  double beta0 = 10.0;
  double alpha0 = 1.0;
  double epsilon = 0.03;
  double c = 1.0;
  std::uint64_t master_seed = 0;

  void validate() const;
};

struct BenchRow {
  std::uint64_t corpus_id = 0;
  std::uint32_t true_k = 0;
  int k_hat = -1;              // -1 marks a row whose estimate failed
  double seconds = 0.0;        // selection time only
  std::string error;           // nonempty when the row failed
};

struct BenchResult {
  std::vector<BenchRow> rows;
  std::uint64_t error_count = 0;   // rows with k_hat != true_k
  double mean_time = 0.0;          // mean selection seconds over completed rows
};

/// Runs the sweep. Row i's corpus is drawn from substream (master_seed, i),
/// so rows are reproducible independently of each other and of the thread
/// count (threads = 0 means hardware concurrency). Per-row failures are
/// recorded, not propagated.
BenchResult run_benchmark(const BenchConfig& cfg, unsigned threads = 1);

/// CSV export, header "corpus_id,true_K,k_hat,seconds".
void export_results(const BenchResult& r, const std::string& path);

/// Reads back an exported CSV (integer fields exact).
BenchResult read_results(const std::string& path);

} // namespace topicsel
