// Command line front end: generate synthetic corpora, estimate topic
// counts, run the replication benchmark, and run the singular-value
// dominance sweep.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "topicsel/bench.hpp"
#include "topicsel/corpus.hpp"
#include "topicsel/dominance.hpp"
#include "topicsel/errors.hpp"
#include "topicsel/io.hpp"
#include "topicsel/moments.hpp"
#include "topicsel/selector.hpp"

namespace {

using topicsel::BenchConfig;
using topicsel::BoundParams;
using topicsel::CorpusSpec;
using topicsel::DominanceTrialConfig;

constexpr int kExitOk = 0;
constexpr int kExitParameter = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitIo = 3;

// Expands "--config FILE" into the equivalent flags. The file is flat
// "key=value" lines ('#' comments allowed); a key is skipped when the
// matching --key flag was given explicitly, so flags win over the config
// file and the config file wins over defaults.
std::vector<std::string> expand_config_args(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    }
  }
  if (config_path.empty()) {
    return args;
  }
  std::ifstream in(config_path);
  if (!in) {
    throw topicsel::IoError("cannot open config file '" + config_path + "'");
  }
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (!trim(line).empty()) {
        throw topicsel::ParameterError("config file '" + config_path +
                                       "': expected key=value, got '" + trim(line) + "'");
      }
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw topicsel::ParameterError("config file '" + config_path + "': empty key");
    }
    const std::string flag = "--" + key;
    bool given = false;
    for (const auto& a : args) {
      if (a == flag || a.rfind(flag + "=", 0) == 0) {
        given = true;
        break;
      }
    }
    if (!given) {
      args.push_back(flag);
      args.push_back(value);
    }
  }
  return args;
}

struct GenerateOptions {
  CorpusSpec spec;
  double alpha0 = 1.0;
  std::string out;
  std::string truth_out;
};

int cmd_generate(const GenerateOptions& opt) {
  const CorpusSpec spec =
      CorpusSpec::symmetric(opt.spec.vocab_size, opt.spec.topic_count, opt.spec.doc_count,
                            opt.spec.doc_length, opt.alpha0, opt.spec.beta0, opt.spec.seed);
  const auto [corpus, gt] = topicsel::generate_corpus(spec);
  topicsel::write_corpus(corpus, opt.out);
  if (!opt.truth_out.empty()) {
    topicsel::write_ground_truth(gt, opt.truth_out);
  }
  std::cout << "wrote " << corpus.docs.size() << " documents to " << opt.out << "\n";
  return kExitOk;
}

struct SelectOptions {
  std::string corpus_path;
  BoundParams params;
  std::string report_path;
  std::string out;
};

int cmd_select(const SelectOptions& opt) {
  const topicsel::Corpus corpus = topicsel::read_corpus(opt.corpus_path);
  BoundParams params = opt.params;
  params.V = corpus.vocab_size;
  const topicsel::EstimateReport report = topicsel::estimate_topic_count(corpus, params);

  if (report.stopped_at_cap) {
    std::cerr << "warning: bound stayed above threshold up to k = V-1; "
                 "increase the corpus or epsilon\n";
  }
  if (!opt.report_path.empty()) {
    nlohmann::json j;
    j["k_hat"] = report.k_hat;
    j["tilde_alpha"] = report.tilde_alpha;
    j["spectrum"] = std::vector<double>(report.spectrum.data(),
                                        report.spectrum.data() + report.spectrum.size());
    j["threshold"] = report.threshold;
    j["stopped_at_cap"] = report.stopped_at_cap;
    std::ofstream out(opt.report_path);
    if (!out) {
      throw topicsel::IoError("cannot open '" + opt.report_path + "' for writing");
    }
    out << j.dump(2) << '\n';
  }
  if (!opt.out.empty()) {
    std::ofstream out(opt.out);
    if (!out) {
      throw topicsel::IoError("cannot open '" + opt.out + "' for writing");
    }
    out << "k_hat=" << report.k_hat << "\n";
  }
  std::cout << "k_hat=" << report.k_hat << "\n";
  return kExitOk;
}

struct BenchOptions {
  BenchConfig cfg;
  unsigned threads = 1;
  std::string out;
};

int cmd_bench(const BenchOptions& opt) {
  const topicsel::BenchResult result = topicsel::run_benchmark(opt.cfg, opt.threads);
  if (!opt.out.empty()) {
    topicsel::export_results(result, opt.out);
  }
  std::printf("corpora=%zu errors=%llu mean_seconds=%.6f\n", result.rows.size(),
              static_cast<unsigned long long>(result.error_count), result.mean_time);
  for (const auto& row : result.rows) {
    if (!row.error.empty()) {
      std::cerr << "corpus " << row.corpus_id << " failed: " << row.error << "\n";
    }
  }
  return kExitOk;
}

struct RmtOptions {
  std::uint32_t V = 100;
  std::vector<std::uint32_t> K{10, 30, 50, 70, 90};
  std::vector<double> beta0{10.0, 100.0, 1000.0};
  double c0 = 1.0;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string out;
};

int cmd_rmt(const RmtOptions& opt) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!opt.out.empty()) {
    file.open(opt.out);
    if (!file) {
      throw topicsel::IoError("cannot open '" + opt.out + "' for writing");
    }
    out = &file;
  }
  *out << "V,K,beta0,c0,trials,violations,min_sigma,bound\n";
  std::uint64_t cell = 0;
  for (const double beta0 : opt.beta0) {
    for (const std::uint32_t K : opt.K) {
      DominanceTrialConfig cfg;
      cfg.V = opt.V;
      cfg.K = K;
      cfg.beta0 = beta0;
      cfg.trials = opt.trials;
      cfg.c0 = opt.c0;
      cfg.seed = topicsel::derive_seed(opt.seed, cell++);
      const topicsel::DominanceResult res = topicsel::monte_carlo_dominance(cfg, opt.threads);
      char buf[128];
      std::snprintf(buf, sizeof(buf), "%u,%u,%.17g,%.17g,%llu,%llu,%.17g,%.17g\n", opt.V, K,
                    beta0, opt.c0, static_cast<unsigned long long>(res.trials),
                    static_cast<unsigned long long>(res.violations), res.min_observed_sigma,
                    res.bound_value);
      *out << buf;
      out->flush();
    }
  }
  if (!*out) {
    throw topicsel::IoError("write failure on dominance CSV");
  }
  return kExitOk;
}

void add_config_flag(CLI::App* sub) {
  sub->add_option("--config")
      ->description("flat key=value config file (command-line flags win)");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral topic-count estimation for LDA corpora"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Generate a synthetic corpus");
  generate->add_option("--V", gen.spec.vocab_size, "vocabulary size")->required();
  generate->add_option("--K", gen.spec.topic_count, "topic count")->required();
  generate->add_option("--D", gen.spec.doc_count, "document count")->required();
  generate->add_option("--doc-length", gen.spec.doc_length, "tokens per document")
      ->default_val(10);
  generate->add_option("--alpha0", gen.alpha0, "document-topic concentration (symmetric)")
      ->default_val(1.0);
  generate->add_option("--beta0", gen.spec.beta0, "word-topic concentration")->default_val(10.0);
  generate->add_option("--seed", gen.spec.seed, "random seed")->default_val(0);
  generate->add_option("--out", gen.out, "corpus output path")->required();
  generate->add_option("--truth-out", gen.truth_out, "ground-truth output path");
  add_config_flag(generate);

  SelectOptions sel;
  auto* select = app.add_subcommand("select", "Estimate the number of topics in a corpus");
  select->add_option("corpus", sel.corpus_path, "corpus file")->required();
  select->add_option("--alpha0", sel.params.alpha0, "document-topic concentration")->required();
  select->add_option("--beta0", sel.params.beta0, "word-topic concentration")->required();
  select->add_option("--epsilon", sel.params.epsilon, "relevance threshold")->default_val(0.03);
  select->add_option("--c", sel.params.c, "dominance constant")->default_val(1.0);
  select->add_option("--report", sel.report_path, "write a JSON report here");
  select->add_option("--out", sel.out, "also write the k_hat line to this file");
  add_config_flag(select);

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run the synthetic replication benchmark");
  bench_cmd->add_option("--V", bench.cfg.V)->default_val(100);
  bench_cmd->add_option("--D", bench.cfg.D)->default_val(1000);
  bench_cmd->add_option("--doc-length", bench.cfg.doc_length)->default_val(10);
  bench_cmd->add_option("--k-min", bench.cfg.k_min)->default_val(5);
  bench_cmd->add_option("--k-max", bench.cfg.k_max)->default_val(25);
  bench_cmd->add_option("--corpora-per-k", bench.cfg.corpora_per_k)->default_val(10);
  bench_cmd->add_option("--beta0", bench.cfg.beta0)->default_val(10.0);
  bench_cmd->add_option("--alpha0", bench.cfg.alpha0)->default_val(1.0);
  bench_cmd->add_option("--epsilon", bench.cfg.epsilon)->default_val(0.03);
  bench_cmd->add_option("--c", bench.cfg.c)->default_val(1.0);
  bench_cmd->add_option("--seed", bench.cfg.master_seed)->default_val(0);
  bench_cmd->add_option("--threads", bench.threads, "0 = all cores")->default_val(1);
  bench_cmd->add_option("--out", bench.out, "results CSV path");
  add_config_flag(bench_cmd);

  RmtOptions rmt;
  auto* rmt_cmd = app.add_subcommand("rmt", "Monte Carlo dominance sweep for the singular-value bound");
  rmt_cmd->add_option("--V", rmt.V)->default_val(100);
  rmt_cmd->add_option("--K", rmt.K, "topic counts (comma separated)")->delimiter(',');
  rmt_cmd->add_option("--beta0", rmt.beta0, "concentrations (comma separated)")->delimiter(',');
  rmt_cmd->add_option("--c0", rmt.c0)->default_val(1.0);
  rmt_cmd->add_option("--trials", rmt.trials)->default_val(10000);
  rmt_cmd->add_option("--seed", rmt.seed)->default_val(0);
  rmt_cmd->add_option("--threads", rmt.threads, "0 = all cores")->default_val(0);
  rmt_cmd->add_option("--out", rmt.out, "CSV path (default stdout)");
  add_config_flag(rmt_cmd);

  try {
    std::vector<std::string> args = expand_config_args(argc, argv);
    std::vector<const char*> argv2;
    argv2.push_back(argv[0]);
    for (const auto& a : args) argv2.push_back(a.c_str());
    app.parse(static_cast<int>(argv2.size()), argv2.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e); // --help and friends
    }
    app.exit(e);
    return kExitParameter;
  } catch (const topicsel::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const topicsel::ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kExitParameter;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen);
    if (select->parsed()) return cmd_select(sel);
    if (bench_cmd->parsed()) return cmd_bench(bench);
    if (rmt_cmd->parsed()) return cmd_rmt(rmt);
  } catch (const topicsel::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const topicsel::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const topicsel::ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kExitParameter;
  } catch (const topicsel::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitParameter;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitParameter;
}
