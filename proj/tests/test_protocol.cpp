#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lsc/corpus.hpp"
#include "lsc/metrics.hpp"
#include "lsc/protocol.hpp"
#include "lsc/synthetic.hpp"
#include "oracles.hpp"

using lsc::Polarity;
using lsc::System;

namespace {

std::vector<lsc::DomainDataset> tiny_corpus(std::uint64_t seed, int domains = 3) {
  lsc::SyntheticSpec spec;
  spec.domains = domains;
  spec.docs_per_domain = 60;
  spec.lexicon_size = 12;
  spec.neutral_words_per_domain = 6;
  spec.seed = seed;
  return lsc::make_synthetic_corpus(spec).datasets;
}

lsc::ProtocolRun run_for(const std::vector<lsc::DomainDataset>& corpora,
                         const std::string& target, int folds = 5) {
  lsc::ProtocolRun run;
  run.target = target;
  for (const auto& ds : corpora) {
    if (ds.name != target) run.past.push_back(ds.name);
  }
  run.folds = folds;
  run.seed = 11;
  return run;
}

}  // namespace

TEST_CASE("run validation catches contradictory domain lists") {
  lsc::ProtocolRun run;
  run.target = "a";
  run.past = {"b", "a"};
  CHECK_THROWS_AS(lsc::validate(run), lsc::ProtocolError);
  run.past = {"b", "b"};
  CHECK_THROWS_AS(lsc::validate(run), lsc::ProtocolError);
  run.past = {"b"};
  CHECK_NOTHROW(lsc::validate(run));
}

TEST_CASE("baselines cover the target exactly once per fold") {
  auto corpora = tiny_corpus(1);
  auto run = run_for(corpora, corpora[0].name);

  for (System system : {System::NbT, System::NbS, System::NbSt}) {
    auto preds = lsc::run_baseline(system, run, corpora);
    CHECK(preds.ids.size() == corpora[0].documents.size());
    std::set<std::string> seen(preds.ids.begin(), preds.ids.end());
    CHECK(seen.size() == preds.ids.size());
  }
}

TEST_CASE("NB-S needs past domains, NB-ST without them equals NB-T") {
  auto corpora = tiny_corpus(2, 1);
  lsc::ProtocolRun run = run_for(corpora, corpora[0].name);
  REQUIRE(run.past.empty());

  CHECK_THROWS_AS(lsc::run_baseline(System::NbS, run, corpora),
                  lsc::ProtocolError);

  auto nb_t = lsc::run_baseline(System::NbT, run, corpora);
  auto nb_st = lsc::run_baseline(System::NbSt, run, corpora);
  CHECK(nb_t.ids == nb_st.ids);
  CHECK(nb_t.pred == nb_st.pred);
}

TEST_CASE("unknown domains are rejected") {
  auto corpora = tiny_corpus(3);
  auto run = run_for(corpora, "nonexistent");
  CHECK_THROWS_AS(lsc::run_baseline(System::NbT, run, corpora),
                  lsc::ProtocolError);
  CHECK_THROWS_AS(lsc::run_baseline(System::Lsc, run, corpora),
                  lsc::ProtocolError);
}

TEST_CASE("a polarity-flipped word fools the source-only baseline") {
  // Past domain: "w" is positive. Target domain: "w" is negative.
  std::vector<lsc::Document> past_docs, target_docs;
  for (int i = 0; i < 10; ++i) {
    past_docs.push_back(oracle::make_doc("pp" + std::to_string(i), {{"w", 2}},
                                         Polarity::Positive));
    past_docs.push_back(oracle::make_doc("pn" + std::to_string(i), {{"z", 2}},
                                         Polarity::Negative));
    target_docs.push_back(oracle::make_doc("tp" + std::to_string(i), {{"y", 2}},
                                           Polarity::Positive));
    target_docs.push_back(oracle::make_doc("tn" + std::to_string(i), {{"w", 2}},
                                           Polarity::Negative));
  }
  std::vector<lsc::DomainDataset> corpora = {
      lsc::make_dataset("target", target_docs),
      lsc::make_dataset("past", past_docs),
  };
  auto run = run_for(corpora, "target", 5);

  auto nb_t = lsc::run_baseline(System::NbT, run, corpora);
  auto nb_s = lsc::run_baseline(System::NbS, run, corpora);

  // target-only gets every document right; source-only mislabels every
  // "w" document as positive
  CHECK(lsc::accuracy(nb_t.pred, nb_t.gold) == 1.0);
  for (std::size_t i = 0; i < nb_s.ids.size(); ++i) {
    if (nb_s.ids[i].rfind("tn", 0) == 0) {
      CHECK(nb_s.pred[i] == Polarity::Positive);
    }
  }
}

TEST_CASE("lifelong run covers the target once and reports fold stats") {
  auto corpora = tiny_corpus(4);
  auto run = run_for(corpora, corpora[1].name);
  auto result = lsc::run_lsc(run, corpora);

  CHECK(result.predictions.ids.size() == corpora[1].documents.size());
  std::set<std::string> seen(result.predictions.ids.begin(),
                             result.predictions.ids.end());
  CHECK(seen.size() == result.predictions.ids.size());

  REQUIRE(result.fold_stats.size() == 5);
  for (const auto& fs : result.fold_stats) {
    CHECK(fs.domain == run.target);
    CHECK(fs.epochs_run <= run.config.max_epochs);
  }

  // determinism: identical run, identical predictions and stats
  auto again = lsc::run_lsc(run, corpora);
  CHECK(again.predictions.pred == result.predictions.pred);
  for (std::size_t i = 0; i < again.fold_stats.size(); ++i) {
    CHECK(again.fold_stats[i].final_objective ==
          result.fold_stats[i].final_objective);
  }

  lsc::ProtocolRun no_past = run;
  no_past.past.clear();
  CHECK_THROWS_AS(lsc::run_lsc(no_past, corpora), lsc::ProtocolError);
}

TEST_CASE("protocol report averages recompute from the per-domain table") {
  auto corpora = tiny_corpus(5);
  lsc::EvalOptions options;
  options.folds = 4;
  options.seed = 2;
  auto report = lsc::run_protocol(corpora, options);

  REQUIRE(report.per_domain.size() == corpora.size());
  for (System system : report.systems) {
    double sum_f1 = 0.0, sum_acc = 0.0;
    for (const auto& [domain, scores] : report.per_domain) {
      const auto& s = scores.at(system);
      CHECK(s.f1_negative >= 0.0);
      CHECK(s.f1_negative <= 1.0);
      CHECK(s.accuracy >= 0.0);
      CHECK(s.accuracy <= 1.0);
      sum_f1 += s.f1_negative;
      sum_acc += s.accuracy;
    }
    double n = static_cast<double>(report.per_domain.size());
    CHECK(std::abs(report.averages.at(system).f1_negative - sum_f1 / n) < 1e-12);
    CHECK(std::abs(report.averages.at(system).accuracy - sum_acc / n) < 1e-12);
  }
}

TEST_CASE("balanced setting balances every domain") {
  auto corpora = tiny_corpus(6);
  auto balanced = lsc::apply_setting(corpora, lsc::Setting::Balanced, 1, 0);
  REQUIRE(balanced.size() == corpora.size());
  for (std::size_t i = 0; i < balanced.size(); ++i) {
    auto [pos, neg] = lsc::class_counts(balanced[i].documents);
    CHECK(pos == neg);
    auto [opos, oneg] = lsc::class_counts(corpora[i].documents);
    CHECK(pos == std::min(opos, oneg));
  }
  // natural passes through untouched
  auto natural = lsc::apply_setting(corpora, lsc::Setting::Natural, 1, 0);
  CHECK(natural.size() == corpora.size());
  CHECK(natural[0].documents.size() == corpora[0].documents.size());
}

TEST_CASE("TSV and JSON reports carry identical values and are stable") {
  auto corpora = tiny_corpus(7);
  lsc::EvalOptions options;
  options.folds = 4;
  options.systems = {System::NbT, System::Lsc};
  auto report = lsc::run_protocol(corpora, options);

  std::string tsv = lsc::report_to_tsv(report);
  std::string json_text = lsc::report_to_json(report);

  // byte-determinism of the writers
  CHECK(tsv == lsc::report_to_tsv(report));
  CHECK(json_text == lsc::report_to_json(report));

  // parse both and compare all numeric cells
  auto parsed = nlohmann::json::parse(json_text);
  CHECK(parsed["schema_version"] == 1);
  std::map<std::string, double> tsv_values;
  std::istringstream lines(tsv);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    auto t1 = line.find('\t');
    auto t2 = line.find('\t', t1 + 1);
    auto t3 = line.find('\t', t2 + 1);
    REQUIRE(t3 != std::string::npos);
    std::string key = line.substr(0, t3);
    tsv_values[key] = std::stod(line.substr(t3 + 1));
  }
  for (const auto& [domain, by_system] : parsed["per_domain"].items()) {
    for (const auto& [system, scores] : by_system.items()) {
      for (const auto& [metric, value] : scores.items()) {
        std::string key = domain + "\t" + system + "\t" + metric;
        REQUIRE(tsv_values.count(key) == 1);
        CHECK(tsv_values.at(key) == doctest::Approx(value.get<double>())
                                        .epsilon(1e-12));
      }
    }
  }
  for (const auto& [system, scores] : parsed["averages"].items()) {
    for (const auto& [metric, value] : scores.items()) {
      std::string key = "average\t" + system + "\t" + metric;
      REQUIRE(tsv_values.count(key) == 1);
      CHECK(tsv_values.at(key) ==
            doctest::Approx(value.get<double>()).epsilon(1e-12));
    }
  }
}

TEST_CASE("ablation: size zero equals the target-only baseline") {
  auto corpora = tiny_corpus(8);
  auto run = run_for(corpora, corpora[0].name, 4);

  auto curve = lsc::ablation_past_domains(run, corpora, {0, 2}, 2);
  REQUIRE(curve.size() == 2);
  CHECK(curve[0].first == 0);

  auto nb_t = lsc::run_baseline(System::NbT, run, corpora);
  double nb_t_metric = lsc::f1_negative(nb_t.pred, nb_t.gold);
  CHECK(curve[0].second == nb_t_metric);

  // determinism and bad sizes
  auto again = lsc::ablation_past_domains(run, corpora, {0, 2}, 2);
  CHECK(again == curve);
  CHECK_THROWS_AS(lsc::ablation_past_domains(run, corpora, {3}, 2),
                  lsc::ProtocolError);
}

TEST_CASE("run_ablation averages over targets and writes a curve report") {
  auto corpora = tiny_corpus(9);
  lsc::AblationOptions options;
  options.sizes = {0, 2};
  options.repetitions = 1;
  options.folds = 4;
  auto report = lsc::run_ablation(corpora, options);
  REQUIRE(report.ablation_curve.size() == 2);
  for (const auto& [size, value] : report.ablation_curve) {
    CHECK(value >= 0.0);
    CHECK(value <= 1.0);
  }
  std::string tsv = lsc::report_to_tsv(report);
  CHECK(tsv.find("past_domains\tmean_metric") != std::string::npos);
}

TEST_CASE("synthetic corpus shape and JSONL round-trip") {
  lsc::SyntheticSpec spec;
  spec.domains = 4;
  spec.docs_per_domain = 50;
  spec.lexicon_size = 16;
  spec.seed = 33;
  auto corpus = lsc::make_synthetic_corpus(spec);

  REQUIRE(corpus.datasets.size() == 4);
  REQUIRE(corpus.records.size() == 4);
  for (const auto& ds : corpus.datasets) {
    CHECK(ds.documents.size() == 50);
    auto [pos, neg] = lsc::class_counts(ds.documents);
    CHECK(pos > neg);  // skewed natural distribution
    CHECK(neg > 0);
  }

  // generation is deterministic per seed
  auto corpus2 = lsc::make_synthetic_corpus(spec);
  CHECK(corpus2.datasets[2].documents[7].counts ==
        corpus.datasets[2].documents[7].counts);

  // writing and loading back reproduces the bags exactly
  auto dir = std::filesystem::temp_directory_path() / "lsc_synth_rt";
  std::filesystem::remove_all(dir);
  lsc::write_synthetic_jsonl(corpus, dir);
  auto loaded = lsc::load_corpus_dir(dir);
  REQUIRE(loaded.size() == corpus.datasets.size());
  for (std::size_t d = 0; d < loaded.size(); ++d) {
    CHECK(loaded[d].name == corpus.datasets[d].name);
    CHECK(loaded[d].vocabulary == corpus.datasets[d].vocabulary);
    REQUIRE(loaded[d].documents.size() == corpus.datasets[d].documents.size());
    for (std::size_t i = 0; i < loaded[d].documents.size(); ++i) {
      CHECK(loaded[d].documents[i].id == corpus.datasets[d].documents[i].id);
      CHECK(loaded[d].documents[i].label ==
            corpus.datasets[d].documents[i].label);
      CHECK(loaded[d].documents[i].counts ==
            corpus.datasets[d].documents[i].counts);
    }
  }
}
