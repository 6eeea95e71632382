#include <benchmark/benchmark.h>

#include "topicsel/corpus.hpp"
#include "topicsel/dominance.hpp"
#include "topicsel/moments.hpp"
#include "topicsel/selector.hpp"
#include "topicsel/spectral.hpp"

namespace {

using namespace topicsel;

const Corpus& experiment_corpus() {
  static const Corpus corpus = [] {
    const CorpusSpec spec = CorpusSpec::symmetric(100, 15, 1000, 10, 1.0, 10.0, 1234);
    return generate_corpus(spec).first;
  }();
  return corpus;
}

void BM_GenerateCorpus(benchmark::State& state) {
  const CorpusSpec spec = CorpusSpec::symmetric(
      100, static_cast<std::uint32_t>(state.range(0)), 1000, 10, 1.0, 10.0, 7);
  for (auto _ : state) {
    auto pair = generate_corpus(spec);
    benchmark::DoNotOptimize(pair.first);
  }
}
BENCHMARK(BM_GenerateCorpus)->Arg(5)->Arg(15)->Arg(25);

void BM_MomentEstimation(benchmark::State& state) {
  const Corpus& corpus = experiment_corpus();
  for (auto _ : state) {
    MomentEstimates m = estimate_moments(corpus);
    benchmark::DoNotOptimize(m.m2);
  }
}
BENCHMARK(BM_MomentEstimation);

void BM_FullSpectrum(benchmark::State& state) {
  const MomentEstimates m = estimate_moments(experiment_corpus());
  const ShiftedMoment s = shifted_moment(m, 1.0);
  for (auto _ : state) {
    Spectrum sv = singular_values(s.m12);
    benchmark::DoNotOptimize(sv);
  }
}
BENCHMARK(BM_FullSpectrum);

void BM_EstimateTopicCount(benchmark::State& state) {
  const Corpus& corpus = experiment_corpus();
  BoundParams p;
  p.alpha0 = 1.0;
  p.beta0 = 10.0;
  p.epsilon = 0.03;
  p.c = 1.0;
  p.V = 100;
  for (auto _ : state) {
    EstimateReport report = estimate_topic_count(corpus, p);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_EstimateTopicCount);

void BM_DominanceTrials(benchmark::State& state) {
  DominanceTrialConfig cfg;
  cfg.V = 100;
  cfg.K = static_cast<std::uint32_t>(state.range(0));
  cfg.beta0 = 10.0;
  cfg.trials = 20;
  cfg.c0 = 1.0;
  cfg.seed = 5;
  for (auto _ : state) {
    DominanceResult res = monte_carlo_dominance(cfg, 1);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_DominanceTrials)->Arg(10)->Arg(50)->Arg(90);

} // namespace

BENCHMARK_MAIN();
