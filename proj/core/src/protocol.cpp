#include "lsc/protocol.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lsc/corpus.hpp"
#include "lsc/metrics.hpp"
#include "lsc/rng.hpp"

namespace lsc {

const char* to_string(Setting s) {
  return s == Setting::Natural ? "natural" : "balanced";
}

const char* to_string(System s) {
  switch (s) {
    case System::NbT: return "NB-T";
    case System::NbS: return "NB-S";
    case System::NbSt: return "NB-ST";
    case System::Lsc: return "LSC";
  }
  return "?";
}

System system_from_string(const std::string& name) {
  for (System s : all_systems()) {
    if (name == to_string(s)) return s;
  }
  throw ProtocolError("unknown system '" + name + "'");
}

std::vector<System> all_systems() {
  return {System::NbT, System::NbS, System::NbSt, System::Lsc};
}

void validate(const ProtocolRun& run) {
  if (run.target.empty()) throw ProtocolError("run: empty target domain");
  if (run.folds < 2) throw ProtocolError("run: folds must be >= 2");
  std::set<std::string> seen;
  for (const auto& name : run.past) {
    if (name == run.target) {
      throw ProtocolError("run: target '" + run.target + "' is also a past domain");
    }
    if (!seen.insert(name).second) {
      throw ProtocolError("run: duplicate past domain '" + name + "'");
    }
  }
  validate(run.config);
}

namespace {

const DomainDataset& find_dataset(const std::vector<DomainDataset>& corpora,
                                  const std::string& name) {
  for (const auto& ds : corpora) {
    if (ds.name == name) return ds;
  }
  throw ProtocolError("unknown domain '" + name + "'");
}

std::uint64_t fold_seed(const ProtocolRun& run) {
  return derive_seed(run.seed, "folds:" + run.target);
}

void append_predictions(Predictions& out, const std::vector<Document>& docs,
                        const std::vector<Polarity>& preds) {
  for (std::size_t i = 0; i < docs.size(); ++i) {
    out.ids.push_back(docs[i].id);
    out.gold.push_back(docs[i].label);
    out.pred.push_back(preds[i]);
  }
}

}  // namespace

Predictions run_baseline(System kind, const ProtocolRun& run,
                         const std::vector<DomainDataset>& corpora) {
  validate(run);
  const DomainDataset& target = find_dataset(corpora, run.target);
  FoldAssignment folds = make_folds(target, run.folds, fold_seed(run));
  double lambda = run.config.lambda;

  std::vector<Document> past_docs;
  for (const auto& name : run.past) {
    const DomainDataset& ds = find_dataset(corpora, name);
    past_docs.insert(past_docs.end(), ds.documents.begin(), ds.documents.end());
  }

  Predictions out;
  switch (kind) {
    case System::NbT:
    case System::NbSt: {
      for (int f = 0; f < run.folds; ++f) {
        std::vector<Document> train = fold_train_split(target, folds, f);
        if (kind == System::NbSt) {
          train.insert(train.end(), past_docs.begin(), past_docs.end());
        }
        DomainDataset train_ds = make_dataset("train", std::move(train));
        NbModel model =
            train_nb(train_ds.documents, lambda, train_ds.vocabulary);
        std::vector<Document> test = fold_test_split(target, folds, f);
        std::vector<Polarity> preds;
        preds.reserve(test.size());
        for (const auto& doc : test) preds.push_back(predict(model, doc));
        append_predictions(out, test, preds);
      }
      return out;
    }
    case System::NbS: {
      if (run.past.empty()) {
        throw ProtocolError("NB-S needs at least one past domain");
      }
      DomainDataset train_ds = make_dataset("train", std::move(past_docs));
      NbModel model = train_nb(train_ds.documents, lambda, train_ds.vocabulary);
      for (int f = 0; f < run.folds; ++f) {
        std::vector<Document> test = fold_test_split(target, folds, f);
        std::vector<Polarity> preds;
        preds.reserve(test.size());
        for (const auto& doc : test) preds.push_back(predict(model, doc));
        append_predictions(out, test, preds);
      }
      return out;
    }
    case System::Lsc:
      throw ProtocolError("run_baseline does not cover LSC; use run_lsc");
  }
  throw ProtocolError("unreachable baseline kind");
}

namespace {

// Shared by run_lsc and the ablation loop, which reuses task records and
// varies the knowledge base.
LscRunResult run_lsc_with_kb(const ProtocolRun& run,
                             const DomainDataset& target,
                             const FoldAssignment& folds,
                             const KnowledgeBase& kb, const LscConfig& config) {
  LscRunResult out;
  for (int f = 0; f < run.folds; ++f) {
    std::vector<Document> train = fold_train_split(target, folds, f);
    std::vector<Document> test = fold_test_split(target, folds, f);
    SgdResult sgd;
    try {
      sgd = sgd_train(train, kb, config);
    } catch (const DivergenceError& e) {
      std::ostringstream os;
      os << "domain '" << run.target << "' fold " << f << ": " << e.what();
      throw DivergenceError(os.str(), e.objective_trace());
    }

    FoldStats stats;
    stats.domain = run.target;
    stats.fold = f;
    stats.epochs_run = sgd.epochs_run;
    stats.converged = sgd.converged;
    stats.initial_objective = sgd.objective_trace.front();
    stats.final_objective = sgd.objective_trace.back();
    out.fold_stats.push_back(stats);

    std::vector<Polarity> preds;
    preds.reserve(test.size());
    for (const auto& doc : test) {
      preds.push_back(classify(sgd.counts, sgd.priors, doc, config.lambda));
    }
    append_predictions(out.predictions, test, preds);
  }
  return out;
}

TaskRecord record_domain(const DomainDataset& ds, double lambda) {
  NbModel model = train_nb(ds.documents, lambda, ds.vocabulary);
  return record_task(model, ds.name);
}

}  // namespace

LscRunResult run_lsc(const ProtocolRun& run,
                     const std::vector<DomainDataset>& corpora) {
  validate(run);
  if (run.past.empty()) {
    throw ProtocolError("run_lsc needs at least one past domain");
  }
  const DomainDataset& target = find_dataset(corpora, run.target);
  FoldAssignment folds = make_folds(target, run.folds, fold_seed(run));

  std::vector<TaskRecord> records;
  records.reserve(run.past.size());
  for (const auto& name : run.past) {
    records.push_back(record_domain(find_dataset(corpora, name),
                                    run.config.lambda));
  }
  KnowledgeBase kb = mine_kb(records);
  return run_lsc_with_kb(run, target, folds, kb, run.config);
}

std::vector<DomainDataset> apply_setting(const std::vector<DomainDataset>& corpora,
                                         Setting setting, std::uint64_t seed,
                                         int balance_per_class) {
  if (setting == Setting::Natural) return corpora;
  std::vector<DomainDataset> out;
  out.reserve(corpora.size());
  for (const auto& ds : corpora) {
    auto [n_pos, n_neg] = class_counts(ds.documents);
    int n = balance_per_class > 0 ? balance_per_class : std::min(n_pos, n_neg);
    out.push_back(balance(ds, n, derive_seed(seed, "balance:" + ds.name)));
  }
  return out;
}

double setting_metric(const DomainScores& scores, Setting setting) {
  return setting == Setting::Natural ? scores.f1_negative : scores.accuracy;
}

namespace {

DomainScores score_predictions(const Predictions& p) {
  DomainScores s;
  s.f1_negative = f1_negative(p.pred, p.gold);
  s.f1_positive = f1_positive(p.pred, p.gold);
  s.accuracy = accuracy(p.pred, p.gold);
  return s;
}

}  // namespace

EvalReport run_protocol(const std::vector<DomainDataset>& corpora,
                        const EvalOptions& options) {
  if (corpora.empty()) throw ProtocolError("run_protocol: no domains");
  if (options.systems.empty()) throw ProtocolError("run_protocol: no systems");

  std::vector<DomainDataset> data = apply_setting(
      corpora, options.setting, options.seed, options.balance_per_class);

  std::vector<std::string> names;
  for (const auto& ds : data) names.push_back(ds.name);
  std::sort(names.begin(), names.end());

  EvalReport report;
  report.setting = options.setting;
  report.folds = options.folds;
  report.seed = options.seed;
  report.systems = options.systems;

  for (const auto& target : names) {
    ProtocolRun run;
    run.target = target;
    for (const auto& name : names) {
      if (name != target) run.past.push_back(name);
    }
    run.setting = options.setting;
    run.folds = options.folds;
    run.seed = options.seed;
    run.config = options.config;

    for (System system : options.systems) {
      Predictions preds;
      if (system == System::Lsc) {
        LscRunResult lsc = run_lsc(run, data);
        preds = std::move(lsc.predictions);
        report.lsc_fold_stats.insert(report.lsc_fold_stats.end(),
                                     lsc.fold_stats.begin(),
                                     lsc.fold_stats.end());
      } else {
        preds = run_baseline(system, run, data);
      }
      report.per_domain[target][system] = score_predictions(preds);
    }
  }

  for (System system : options.systems) {
    DomainScores sum;
    for (const auto& name : names) {
      const DomainScores& s = report.per_domain.at(name).at(system);
      sum.f1_negative += s.f1_negative;
      sum.f1_positive += s.f1_positive;
      sum.accuracy += s.accuracy;
    }
    double n = static_cast<double>(names.size());
    report.averages[system] = {sum.f1_negative / n, sum.f1_positive / n,
                               sum.accuracy / n};
  }
  return report;
}

std::vector<std::pair<int, double>> ablation_past_domains(
    const ProtocolRun& run, const std::vector<DomainDataset>& corpora,
    const std::vector<int>& sizes, int repetitions) {
  validate(run);
  if (repetitions < 1) throw ProtocolError("ablation: repetitions must be >= 1");
  for (int s : sizes) {
    if (s < 0 || s > static_cast<int>(run.past.size())) {
      throw ProtocolError("ablation: size " + std::to_string(s) +
                          " exceeds available past domains (" +
                          std::to_string(run.past.size()) + ")");
    }
  }

  const DomainDataset& target = find_dataset(corpora, run.target);
  FoldAssignment folds = make_folds(target, run.folds, fold_seed(run));

  std::map<std::string, TaskRecord> records;
  for (const auto& name : run.past) {
    records.emplace(name, record_domain(find_dataset(corpora, name),
                                        run.config.lambda));
  }

  std::vector<std::pair<int, double>> curve;
  for (int size : sizes) {
    double metric_sum = 0.0;
    for (int rep = 0; rep < repetitions; ++rep) {
      Rng rng(derive_seed(run.seed, "ablation:" + run.target + ":" +
                                        std::to_string(size) + ":" +
                                        std::to_string(rep)));
      std::vector<std::string> subset = rng.sample(run.past, static_cast<std::size_t>(size));

      std::vector<TaskRecord> chosen;
      for (const auto& name : subset) chosen.push_back(records.at(name));
      KnowledgeBase kb = mine_kb(chosen);

      LscConfig config = run.config;
      if (size == 0) {
        // target-only point: plain NB at the initialization
        config.alpha = 0.0;
        config.max_epochs = 0;
      }
      LscRunResult result = run_lsc_with_kb(run, target, folds, kb, config);
      metric_sum += setting_metric(score_predictions(result.predictions),
                                   run.setting);
    }
    curve.emplace_back(size, metric_sum / repetitions);
  }
  return curve;
}

EvalReport run_ablation(const std::vector<DomainDataset>& corpora,
                        const AblationOptions& options) {
  if (options.sizes.empty()) throw ProtocolError("ablation: no sizes given");

  std::vector<DomainDataset> data = apply_setting(
      corpora, options.setting, options.seed, options.balance_per_class);

  std::vector<std::string> names;
  for (const auto& ds : data) names.push_back(ds.name);
  std::sort(names.begin(), names.end());

  std::vector<std::string> targets;
  if (options.target.empty()) {
    targets = names;
  } else {
    find_dataset(data, options.target);
    targets.push_back(options.target);
  }

  std::vector<double> sums(options.sizes.size(), 0.0);
  for (const auto& target : targets) {
    ProtocolRun run;
    run.target = target;
    for (const auto& name : names) {
      if (name != target) run.past.push_back(name);
    }
    run.setting = options.setting;
    run.folds = options.folds;
    run.seed = options.seed;
    run.config = options.config;

    auto curve =
        ablation_past_domains(run, data, options.sizes, options.repetitions);
    for (std::size_t i = 0; i < curve.size(); ++i) sums[i] += curve[i].second;
  }

  EvalReport report;
  report.setting = options.setting;
  report.folds = options.folds;
  report.seed = options.seed;
  for (std::size_t i = 0; i < options.sizes.size(); ++i) {
    report.ablation_curve.emplace_back(
        options.sizes[i], sums[i] / static_cast<double>(targets.size()));
  }
  return report;
}

}  // namespace lsc
