#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lsc/knowledge.hpp"
#include "lsc/optimizer.hpp"
#include "lsc/types.hpp"

namespace lsc {

enum class Setting { Natural, Balanced };
const char* to_string(Setting s);

enum class System { NbT, NbS, NbSt, Lsc };
const char* to_string(System s);
System system_from_string(const std::string& name);
std::vector<System> all_systems();

// One leave-one-domain-as-target evaluation: the target is folded for
// cross validation, past domains are completed tasks trained on their full
// data.
struct ProtocolRun {
  std::string target;
  std::vector<std::string> past;
  Setting setting = Setting::Natural;
  int folds = 5;
  std::uint64_t seed = 1;
  LscConfig config;
};

void validate(const ProtocolRun& run);

// Pooled cross-validation predictions, aligned by position. The union of
// the per-fold test sets is exactly the target dataset.
struct Predictions {
  std::vector<std::string> ids;
  std::vector<Polarity> gold;
  std::vector<Polarity> pred;
};

struct FoldStats {
  std::string domain;
  int fold = 0;
  int epochs_run = 0;
  bool converged = false;
  double initial_objective = 0.0;
  double final_objective = 0.0;
};

// NB baselines. NbT trains on the target train folds, NbS on the
// concatenated past domains, NbSt on both; the vocabulary is always the
// union of the training documents used.
Predictions run_baseline(System kind, const ProtocolRun& run,
                         const std::vector<DomainDataset>& corpora);

struct LscRunResult {
  Predictions predictions;
  std::vector<FoldStats> fold_stats;
};

// Full lifelong pipeline for one target: record every past domain's NB
// model, mine the knowledge base, then per fold train the target NB for
// the penalty sets, initialize, run SGD and classify the held-out fold.
LscRunResult run_lsc(const ProtocolRun& run,
                     const std::vector<DomainDataset>& corpora);

struct DomainScores {
  double f1_negative = 0.0;
  double f1_positive = 0.0;
  double accuracy = 0.0;
};

struct EvalReport {
  Setting setting = Setting::Natural;
  int folds = 5;
  std::uint64_t seed = 1;
  std::vector<System> systems;
  std::map<std::string, std::map<System, DomainScores>> per_domain;
  std::map<System, DomainScores> averages;  // arithmetic mean over domains
  std::vector<std::pair<int, double>> ablation_curve;  // (#past, mean metric)
  std::vector<FoldStats> lsc_fold_stats;
};

struct EvalOptions {
  Setting setting = Setting::Natural;
  int folds = 5;
  std::uint64_t seed = 1;
  LscConfig config;
  std::vector<System> systems = all_systems();
  // Balanced setting: documents per class per domain; 0 means the largest
  // balanced subset each domain supports.
  int balance_per_class = 0;
};

// Balanced runs subsample every domain; natural runs pass through.
std::vector<DomainDataset> apply_setting(const std::vector<DomainDataset>& corpora,
                                         Setting setting, std::uint64_t seed,
                                         int balance_per_class);

// Every domain takes a turn as target with the rest as past domains.
EvalReport run_protocol(const std::vector<DomainDataset>& corpora,
                        const EvalOptions& options);

// Mean setting metric (negative-class F1 natural, accuracy balanced) of
// the lifelong system per past-domain subset size, averaged over
// `repetitions` seeded subset draws. Target folds are shared across sizes.
// Size 0 degenerates to the target-only baseline (alpha = 0, no epochs).
std::vector<std::pair<int, double>> ablation_past_domains(
    const ProtocolRun& run, const std::vector<DomainDataset>& corpora,
    const std::vector<int>& sizes, int repetitions = 5);

struct AblationOptions {
  std::vector<int> sizes;
  int repetitions = 5;
  Setting setting = Setting::Natural;
  int folds = 5;
  std::uint64_t seed = 1;
  LscConfig config;
  int balance_per_class = 0;
  std::string target;  // empty: average the curve over all targets
};

EvalReport run_ablation(const std::vector<DomainDataset>& corpora,
                        const AblationOptions& options);

double setting_metric(const DomainScores& scores, Setting setting);

// Report writers. TSV has one row per (domain, system, metric) plus
// summary rows under the pseudo-domain "average"; JSON mirrors the same
// values with a schema_version field. Values are fixed at six decimals in
// both formats and emission is byte-deterministic.
std::string report_to_tsv(const EvalReport& report);
std::string report_to_json(const EvalReport& report);
void save_report(const EvalReport& report, const std::filesystem::path& path,
                 const std::string& format);

}  // namespace lsc
