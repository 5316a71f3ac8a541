#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lsc/lsc.hpp"

namespace {

// Command-line mistakes that CLI11 cannot catch itself (exit code 2, like
// parse errors), as opposed to data errors (exit code 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

lsc::Setting parse_setting(const std::string& s) {
  if (s == "natural") return lsc::Setting::Natural;
  if (s == "balanced") return lsc::Setting::Balanced;
  throw UsageError("unknown setting '" + s + "'");
}

std::vector<lsc::System> parse_systems(const std::string& csv) {
  std::vector<lsc::System> systems;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      systems.push_back(lsc::system_from_string(item));
    } catch (const lsc::Error&) {
      throw UsageError("unknown system '" + item +
                       "' (expected NB-T, NB-S, NB-ST or LSC)");
    }
  }
  if (systems.empty()) throw UsageError("--systems selected nothing");
  return systems;
}

std::vector<int> parse_sizes(const std::string& csv) {
  std::vector<int> sizes;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      sizes.push_back(static_cast<int>(lsc::parse_int(item)));
    } catch (const lsc::Error&) {
      throw UsageError("bad size list entry '" + item + "'");
    }
  }
  if (sizes.empty()) throw UsageError("--sizes selected nothing");
  return sizes;
}

void add_config_flags(CLI::App* cmd, lsc::LscConfig& config) {
  cmd->add_option("--sigma", config.sigma, "target-distinguishable ratio threshold");
  cmd->add_option("--tau", config.tau, "domain-frequency threshold");
  cmd->add_option("--alpha", config.alpha, "penalty coefficient");
  cmd->add_option("--gamma", config.learn_rate, "SGD learning rate");
  cmd->add_option("--lambda", config.lambda, "smoothing weight");
  cmd->add_option("--epsilon", config.epsilon, "convergence threshold");
  cmd->add_option("--max-epochs", config.max_epochs, "epoch cap");
  cmd->add_flag_callback(
      "--distinct-length",
      [&config] { config.length_mode = lsc::LengthMode::DistinctWords; },
      "use distinct words instead of total tokens as document length");
}

void emit_report(const lsc::EvalReport& report, const std::string& out,
                 const std::string& format) {
  if (out.empty()) {
    std::cout << (format == "json" ? lsc::report_to_json(report)
                                   : lsc::report_to_tsv(report));
    return;
  }
  lsc::save_report(report, out, format);
  std::cout << "report written to " << out << "\n";
}

void print_summary(const lsc::EvalReport& report) {
  std::cout << "setting: " << lsc::to_string(report.setting)
            << "  folds: " << report.folds << "  seed: " << report.seed << "\n";
  for (lsc::System system : report.systems) {
    const auto& s = report.averages.at(system);
    std::printf("%-6s  f1_neg %.4f  f1_pos %.4f  acc %.4f\n",
                lsc::to_string(system), s.f1_negative, s.f1_positive,
                s.accuracy);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lifelong sentiment classification toolkit"};
  app.require_subcommand(1);
  std::function<int()> action;

  // ---- eval ----------------------------------------------------------
  auto* eval = app.add_subcommand(
      "eval", "leave-one-domain-out evaluation of all systems");
  struct {
    std::string corpus_dir;
    std::string setting = "natural";
    int folds = 5;
    std::uint64_t seed = 1;
    std::string systems = "NB-T,NB-S,NB-ST,LSC";
    std::string out;
    std::string format = "tsv";
    int balance_n = 0;
    lsc::LscConfig config;
  } ev;
  eval->add_option("--corpus-dir", ev.corpus_dir, "directory of <domain>.jsonl files")
      ->required();
  eval->add_option("--setting", ev.setting)->check(CLI::IsMember({"natural", "balanced"}));
  eval->add_option("--folds", ev.folds);
  eval->add_option("--seed", ev.seed);
  eval->add_option("--systems", ev.systems, "comma list of systems to run");
  eval->add_option("--out", ev.out, "report file (stdout when omitted)");
  eval->add_option("--format", ev.format)->check(CLI::IsMember({"tsv", "json"}));
  eval->add_option("--balance-n", ev.balance_n,
                   "balanced setting: documents per class (0 = per-domain max)");
  add_config_flags(eval, ev.config);
  eval->callback([&] {
    action = [&]() -> int {
      lsc::EvalOptions options;
      options.setting = parse_setting(ev.setting);
      options.folds = ev.folds;
      options.seed = ev.seed;
      options.config = ev.config;
      options.systems = parse_systems(ev.systems);
      options.balance_per_class = ev.balance_n;
      auto corpora = lsc::load_corpus_dir(ev.corpus_dir);
      auto report = lsc::run_protocol(corpora, options);
      emit_report(report, ev.out, ev.format);
      if (!ev.out.empty()) print_summary(report);
      return 0;
    };
  });

  // ---- ablation ------------------------------------------------------
  auto* ablation = app.add_subcommand(
      "ablation", "lifelong metric as a function of #past domains");
  struct {
    std::string corpus_dir;
    std::string setting = "natural";
    int folds = 5;
    std::uint64_t seed = 1;
    std::string sizes = "1,3,5,7,9,11,13,15,17,19";
    int reps = 5;
    std::string target;
    std::string out;
    std::string format = "tsv";
    int balance_n = 0;
    lsc::LscConfig config;
  } ab;
  ablation->add_option("--corpus-dir", ab.corpus_dir)->required();
  ablation->add_option("--setting", ab.setting)
      ->check(CLI::IsMember({"natural", "balanced"}));
  ablation->add_option("--folds", ab.folds);
  ablation->add_option("--seed", ab.seed);
  ablation->add_option("--sizes", ab.sizes, "comma list of past-domain counts");
  ablation->add_option("--reps", ab.reps, "subset draws per size");
  ablation->add_option("--target", ab.target,
                       "single target domain (default: average over all)");
  ablation->add_option("--out", ab.out);
  ablation->add_option("--format", ab.format)->check(CLI::IsMember({"tsv", "json"}));
  ablation->add_option("--balance-n", ab.balance_n);
  add_config_flags(ablation, ab.config);
  ablation->callback([&] {
    action = [&]() -> int {
      lsc::AblationOptions options;
      options.sizes = parse_sizes(ab.sizes);
      options.repetitions = ab.reps;
      options.setting = parse_setting(ab.setting);
      options.folds = ab.folds;
      options.seed = ab.seed;
      options.config = ab.config;
      options.balance_per_class = ab.balance_n;
      options.target = ab.target;
      auto corpora = lsc::load_corpus_dir(ab.corpus_dir);
      auto report = lsc::run_ablation(corpora, options);
      emit_report(report, ab.out, ab.format);
      return 0;
    };
  });

  // ---- train ---------------------------------------------------------
  auto* train = app.add_subcommand(
      "train", "train the lifelong classifier for one target domain");
  struct {
    std::string corpus_dir;
    std::string target;
    std::string kb_path;
    std::string out;
    std::string setting = "natural";
    std::uint64_t seed = 1;
    int balance_n = 0;
    lsc::LscConfig config;
  } tr;
  train->add_option("--corpus-dir", tr.corpus_dir)->required();
  train->add_option("--target", tr.target)->required();
  train->add_option("--kb", tr.kb_path,
                    "knowledge snapshot to use instead of mining past domains");
  train->add_option("--out", tr.out, "virtual-counts model file")->required();
  train->add_option("--setting", tr.setting)
      ->check(CLI::IsMember({"natural", "balanced"}));
  train->add_option("--seed", tr.seed);
  train->add_option("--balance-n", tr.balance_n);
  add_config_flags(train, tr.config);
  train->callback([&] {
    action = [&]() -> int {
      auto corpora = lsc::load_corpus_dir(tr.corpus_dir);
      corpora = lsc::apply_setting(corpora, parse_setting(tr.setting), tr.seed,
                                   tr.balance_n);
      const lsc::DomainDataset* target = nullptr;
      for (const auto& ds : corpora) {
        if (ds.name == tr.target) target = &ds;
      }
      if (!target) throw lsc::ProtocolError("unknown domain '" + tr.target + "'");

      lsc::KnowledgeBase kb;
      if (!tr.kb_path.empty()) {
        kb = lsc::load_kb(tr.kb_path);
      } else {
        std::vector<lsc::TaskRecord> records;
        for (const auto& ds : corpora) {
          if (ds.name == tr.target) continue;
          auto model =
              lsc::train_nb(ds.documents, tr.config.lambda, ds.vocabulary);
          records.push_back(lsc::record_task(model, ds.name));
        }
        kb = lsc::mine_kb(records);
      }

      auto result = lsc::sgd_train(target->documents, kb, tr.config);
      lsc::save_virtual_counts(result, tr.config, tr.out);
      std::cout << "trained on '" << tr.target << "' with " << kb.task_count
                << " past tasks: " << result.epochs_run << " epochs, "
                << (result.converged ? "converged" : "epoch cap") << ", objective "
                << result.objective_trace.front() << " -> "
                << result.objective_trace.back() << "\n";
      std::cout << "model written to " << tr.out << "\n";
      return 0;
    };
  });

  // ---- kb ------------------------------------------------------------
  auto* kb_cmd = app.add_subcommand("kb", "build, inspect or merge knowledge snapshots");
  kb_cmd->require_subcommand(1);

  auto* kb_build = kb_cmd->add_subcommand("build", "mine a snapshot from a corpus");
  struct {
    std::string corpus_dir;
    std::vector<std::string> exclude;
    double lambda = 1.0;
    std::string out;
  } kbb;
  kb_build->add_option("--corpus-dir", kbb.corpus_dir)->required();
  kb_build->add_option("--exclude", kbb.exclude, "domains to leave out")
      ->take_all();
  kb_build->add_option("--lambda", kbb.lambda);
  kb_build->add_option("--out", kbb.out)->required();
  kb_build->callback([&] {
    action = [&]() -> int {
      auto corpora = lsc::load_corpus_dir(kbb.corpus_dir);
      std::vector<lsc::TaskRecord> records;
      for (const auto& ds : corpora) {
        if (std::find(kbb.exclude.begin(), kbb.exclude.end(), ds.name) !=
            kbb.exclude.end()) {
          continue;
        }
        auto model = lsc::train_nb(ds.documents, kbb.lambda, ds.vocabulary);
        records.push_back(lsc::record_task(model, ds.name));
      }
      auto kb = lsc::mine_kb(records);
      lsc::save_kb(kb, kbb.out);
      std::cout << "snapshot with " << kb.task_count << " tasks, "
                << kb.n_pos.size() + kb.n_neg.size() << " count entries -> "
                << kbb.out << "\n";
      return 0;
    };
  });

  auto* kb_inspect = kb_cmd->add_subcommand("inspect", "print snapshot summary");
  struct {
    std::string in;
    int top = 10;
  } kbi;
  kb_inspect->add_option("--in", kbi.in)->required();
  kb_inspect->add_option("--top", kbi.top, "strongest-leaning words to list");
  kb_inspect->callback([&] {
    action = [&]() -> int {
      auto kb = lsc::load_kb(kbi.in);
      std::cout << "tasks (" << kb.task_count << "):";
      for (const auto& name : kb.task_names) std::cout << " " << name;
      std::cout << "\n";
      std::set<std::string> words;
      for (const auto& [w, v] : kb.n_pos) words.insert(w);
      for (const auto& [w, v] : kb.n_neg) words.insert(w);
      std::cout << "words: " << words.size() << "\n";

      std::vector<std::pair<int, std::string>> by_lean;
      for (const auto& [w, m] : kb.m_pos) by_lean.emplace_back(m, w);
      for (const auto& [w, m] : kb.m_neg) by_lean.emplace_back(m, w);
      std::sort(by_lean.rbegin(), by_lean.rend());
      std::cout << "strongest domain leans:\n";
      for (int i = 0; i < kbi.top && i < static_cast<int>(by_lean.size()); ++i) {
        const auto& [m, w] = by_lean[i];
        auto m_of = [&](const std::map<std::string, int>& mm) {
          auto it = mm.find(w);
          return it == mm.end() ? 0 : it->second;
        };
        std::printf("  %-20s M+ %-3d M- %-3d\n", w.c_str(), m_of(kb.m_pos),
                    m_of(kb.m_neg));
      }
      return 0;
    };
  });

  auto* kb_merge = kb_cmd->add_subcommand("merge", "merge snapshots with disjoint tasks");
  struct {
    std::vector<std::string> in;
    std::string out;
  } kbm;
  kb_merge->add_option("--in", kbm.in, "snapshot files (two or more)")
      ->required()
      ->expected(2, CLI::detail::expected_max_vector_size);
  kb_merge->add_option("--out", kbm.out)->required();
  kb_merge->callback([&] {
    action = [&]() -> int {
      lsc::KnowledgeBase merged = lsc::load_kb(kbm.in[0]);
      for (std::size_t i = 1; i < kbm.in.size(); ++i) {
        merged = lsc::merge_kb(merged, lsc::load_kb(kbm.in[i]));
      }
      lsc::save_kb(merged, kbm.out);
      std::cout << "merged " << kbm.in.size() << " snapshots, "
                << merged.task_count << " tasks -> " << kbm.out << "\n";
      return 0;
    };
  });

  // ---- gradcheck -----------------------------------------------------
  auto* gradcheck = app.add_subcommand(
      "gradcheck", "finite-difference check of the analytic gradients");
  lsc::GradCheckOptions gc;
  gradcheck->add_option("--seed", gc.seed);
  gradcheck->add_option("--instances", gc.instances);
  gradcheck->add_option("--rel-tol", gc.rel_tol);
  gradcheck->add_flag_callback(
      "--no-penalties", [&gc] { gc.include_penalties = false; },
      "skip the penalty-term checks");
  gradcheck->callback([&] {
    action = [&]() -> int {
      auto result = lsc::run_gradcheck(gc);
      std::printf(
          "gradcheck: %d instances, %d partials checked, %d failures, "
          "max rel err %.3g, %.2fs\n",
          result.instances, result.checks, result.failures, result.max_rel_err,
          result.seconds);
      for (const auto& note : result.failure_notes) {
        std::cout << "  " << note << "\n";
      }
      std::cout << (result.passed() ? "PASS" : "FAIL") << "\n";
      return result.passed() ? 0 : 1;
    };
  });

  // ---- synth ---------------------------------------------------------
  auto* synth = app.add_subcommand(
      "synth", "write the built-in synthetic bias corpus as JSONL");
  lsc::SyntheticSpec sy;
  std::string synth_dir;
  synth->add_option("--out-dir", synth_dir)->required();
  synth->add_option("--seed", sy.seed);
  synth->add_option("--domains", sy.domains);
  synth->add_option("--docs", sy.docs_per_domain);
  synth->add_option("--lexicon", sy.lexicon_size);
  synth->add_option("--flip", sy.flip_fraction, "flipped-polarity fraction");
  synth->add_option("--mismatch", sy.sparse_fraction,
                    "train/test vocabulary mismatch fraction");
  synth->callback([&] {
    action = [&]() -> int {
      auto corpus = lsc::make_synthetic_corpus(sy);
      lsc::write_synthetic_jsonl(corpus, synth_dir);
      std::cout << "wrote " << corpus.datasets.size() << " domains to "
                << synth_dir << "\n";
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const lsc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
