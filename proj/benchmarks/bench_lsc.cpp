#include <benchmark/benchmark.h>

#include "lsc/lsc.hpp"

namespace {

lsc::SyntheticCorpus& bench_corpus() {
  static lsc::SyntheticCorpus corpus = [] {
    lsc::SyntheticSpec spec;
    spec.domains = 6;
    spec.docs_per_domain = 200;
    spec.seed = 42;
    return lsc::make_synthetic_corpus(spec);
  }();
  return corpus;
}

lsc::KnowledgeBase bench_kb(int skip_domain) {
  const auto& corpus = bench_corpus();
  std::vector<lsc::TaskRecord> records;
  for (std::size_t d = 0; d < corpus.datasets.size(); ++d) {
    if (static_cast<int>(d) == skip_domain) continue;
    const auto& ds = corpus.datasets[d];
    records.push_back(
        lsc::record_task(lsc::train_nb(ds.documents, 1.0, ds.vocabulary), ds.name));
  }
  return lsc::mine_kb(records);
}

void BM_Tokenize(benchmark::State& state) {
  std::string text =
      "This isn't the best film I have seen, not by a long shot. "
      "Still, the cast never fails to entertain; good fun overall!";
  for (auto _ : state) {
    benchmark::DoNotOptimize(lsc::tokenize(text));
  }
}
BENCHMARK(BM_Tokenize);

void BM_TrainNb(benchmark::State& state) {
  const auto& ds = bench_corpus().datasets[0];
  for (auto _ : state) {
    benchmark::DoNotOptimize(lsc::train_nb(ds.documents, 1.0, ds.vocabulary));
  }
}
BENCHMARK(BM_TrainNb);

void BM_Predict(benchmark::State& state) {
  const auto& ds = bench_corpus().datasets[0];
  auto model = lsc::train_nb(ds.documents, 1.0, ds.vocabulary);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lsc::predict(model, ds.documents[i]));
    i = (i + 1) % ds.documents.size();
  }
}
BENCHMARK(BM_Predict);

void BM_MineKb(benchmark::State& state) {
  const auto& corpus = bench_corpus();
  std::vector<lsc::TaskRecord> records;
  for (const auto& ds : corpus.datasets) {
    records.push_back(
        lsc::record_task(lsc::train_nb(ds.documents, 1.0, ds.vocabulary), ds.name));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(lsc::mine_kb(records));
  }
}
BENCHMARK(BM_MineKb);

void BM_SgdTrain(benchmark::State& state) {
  const auto& ds = bench_corpus().datasets[0];
  auto kb = bench_kb(0);
  lsc::LscConfig config;
  config.max_epochs = static_cast<int>(state.range(0));
  config.epsilon = 1e-12;  // run the full epoch budget
  for (auto _ : state) {
    benchmark::DoNotOptimize(lsc::sgd_train(ds.documents, kb, config));
  }
}
BENCHMARK(BM_SgdTrain)->Arg(10)->Arg(50);

void BM_GradCheck(benchmark::State& state) {
  lsc::GradCheckOptions options;
  options.instances = 100;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lsc::run_gradcheck(options));
  }
}
BENCHMARK(BM_GradCheck);

}  // namespace

BENCHMARK_MAIN();
