#include "topicsel/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "topicsel/errors.hpp"
#include "topicsel/rng.hpp"

namespace topicsel {

void BenchConfig::validate() const {
  if (k_min < 1 || k_min > k_max || k_max >= V) {
    throw ParameterError("BenchConfig: K range must lie within [1, V-1]");
  }
  if (corpora_per_k < 1) {
    throw ParameterError("BenchConfig: corpora_per_k must be >= 1");
  }
  if (D < 1 || doc_length < 2) {
    throw ParameterError("BenchConfig: needs D >= 1 and doc_length >= 2");
  }
}

BenchResult run_benchmark(const BenchConfig& cfg, unsigned threads) {
  cfg.validate();
  const std::uint64_t k_values = cfg.k_max - cfg.k_min + 1;
  const std::uint64_t total = k_values * cfg.corpora_per_k;

  BenchResult result;
  result.rows.resize(total);

  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));

  std::atomic<std::uint64_t> next_row{0};
  auto worker = [&]() {
    for (;;) {
      const std::uint64_t i = next_row.fetch_add(1, std::memory_order_relaxed);
      if (i >= total) break;
      BenchRow& row = result.rows[i];
      row.corpus_id = i;
      row.true_k = cfg.k_min + static_cast<std::uint32_t>(i / cfg.corpora_per_k);
      try {
        CorpusSpec spec = CorpusSpec::symmetric(
            cfg.V, row.true_k, cfg.D, cfg.doc_length, cfg.alpha0, cfg.beta0,
            derive_seed(cfg.master_seed, i));
        const auto [corpus, gt] = generate_corpus(spec);

        BoundParams params;
        params.alpha0 = cfg.alpha0;
        params.beta0 = cfg.beta0;
        params.epsilon = cfg.epsilon;
        params.c = cfg.c;
        params.V = cfg.V;

        const auto t0 = std::chrono::steady_clock::now();
        const EstimateReport report = estimate_topic_count(corpus, params);
        const auto t1 = std::chrono::steady_clock::now();

        row.k_hat = report.k_hat;
        row.seconds = std::chrono::duration<double>(t1 - t0).count();
      } catch (const std::exception& e) {
        row.k_hat = -1;
        row.error = e.what();
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::uint64_t completed = 0;
  double time_sum = 0.0;
  for (const auto& row : result.rows) {
    if (row.k_hat != static_cast<int>(row.true_k)) ++result.error_count;
    if (row.error.empty()) {
      ++completed;
      time_sum += row.seconds;
    }
  }
  result.mean_time = completed > 0 ? time_sum / static_cast<double>(completed) : 0.0;
  return result;
}

void export_results(const BenchResult& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out << "corpus_id,true_K,k_hat,seconds\n";
  char buf[40];
  for (const auto& row : r.rows) {
    std::snprintf(buf, sizeof(buf), "%.17g", row.seconds);
    out << row.corpus_id << ',' << row.true_k << ',' << row.k_hat << ',' << buf << '\n';
  }
  if (!out) {
    throw IoError("write failure on '" + path + "'");
  }
}

BenchResult read_results(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path + "' for reading");
  }
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line) || line != "corpus_id,true_K,k_hat,seconds") {
    throw DataError(path + ":1: missing results header");
  }
  ++line_no;
  BenchResult r;
  std::uint64_t completed = 0;
  double time_sum = 0.0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    BenchRow row;
    char c1 = 0;
    char c2 = 0;
    char c3 = 0;
    if (!(ls >> row.corpus_id >> c1 >> row.true_k >> c2 >> row.k_hat >> c3 >> row.seconds) ||
        c1 != ',' || c2 != ',' || c3 != ',') {
      throw DataError(path + ":" + std::to_string(line_no) + ": malformed results row");
    }
    if (row.k_hat != static_cast<int>(row.true_k)) ++r.error_count;
    if (row.k_hat >= 0) {
      ++completed;
      time_sum += row.seconds;
    }
    r.rows.push_back(row);
  }
  r.mean_time = completed > 0 ? time_sum / static_cast<double>(completed) : 0.0;
  return r;
}

} // namespace topicsel
