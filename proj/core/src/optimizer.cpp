#include "lsc/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "lsc/numeric.hpp"
#include "lsc/rng.hpp"
#include "score_util.hpp"

namespace lsc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Data-term log scores with an explicit totals exponent. With
// length == total tokens these are the ordinary NB log scores; the
// DistinctWords switch only changes this exponent.
std::pair<double, double> data_log_scores(
    Priors priors, double lambda, double t_pos, double t_neg, int length,
    const std::vector<std::tuple<double, double, int>>& entries) {
  double s_pos = std::log(priors.pos) - length * std::log(t_pos);
  double s_neg = std::log(priors.neg) - length * std::log(t_neg);
  for (const auto& [x_pos, x_neg, n] : entries) {
    s_pos += n * std::log(lambda + x_pos);
    s_neg += n * std::log(lambda + x_neg);
  }
  return {s_pos, s_neg};
}

// dF/dX for one document word, F being the per-document objective
// P(y|d) - P(y'|d). `strength` is 2 P(y|d) P(y'|d); see optimizer.hpp for
// the derivation.
GradPair word_grad(Polarity label, double strength, double lambda, double t_pos,
                   double t_neg, int length, int n, double x_pos_u,
                   double x_neg_u) {
  double occ_pos = n / (lambda + x_pos_u);
  double occ_neg = n / (lambda + x_neg_u);
  double tot_pos = length / t_pos;
  double tot_neg = length / t_neg;
  GradPair g;
  if (label == Polarity::Positive) {
    g.d_pos = strength * (occ_pos - tot_pos);
    g.d_neg = strength * (tot_neg - occ_neg);
  } else {
    g.d_pos = strength * (tot_pos - occ_pos);
    g.d_neg = strength * (occ_neg - tot_neg);
  }
  return g;
}

double map_sum(const std::map<std::string, double>& m) {
  double s = 0.0;
  for (const auto& [k, v] : m) s += v;
  return s;
}

}  // namespace

int doc_length(const Document& doc, LengthMode mode) {
  return mode == LengthMode::TotalTokens ? total_tokens(doc)
                                         : distinct_words(doc);
}

void validate(const LscConfig& config) {
  if (config.sigma < 1.0) throw OptimError("config: sigma must be >= 1");
  if (config.tau < 1) throw OptimError("config: tau must be >= 1");
  if (config.alpha < 0.0) throw OptimError("config: alpha must be >= 0");
  if (config.learn_rate <= 0.0) throw OptimError("config: learn_rate must be > 0");
  if (config.lambda < 0.0 || config.lambda > 1.0) {
    throw OptimError("config: lambda must be in [0, 1]");
  }
  if (config.epsilon <= 0.0) throw OptimError("config: epsilon must be > 0");
  if (config.max_epochs < 0) throw OptimError("config: max_epochs must be >= 0");
}

VirtualCounts init_virtual_counts(const std::map<std::string, double>& target_pos,
                                  const std::map<std::string, double>& target_neg,
                                  const KnowledgeBase& kb,
                                  const std::set<std::string>& vocabulary) {
  VirtualCounts x;
  x.vocabulary = vocabulary;
  for (const auto& word : vocabulary) {
    x.x_pos[word] =
        detail::count_of(target_pos, word) + detail::count_of(kb.n_pos, word);
    x.x_neg[word] =
        detail::count_of(target_neg, word) + detail::count_of(kb.n_neg, word);
  }
  return x;
}

std::set<std::string> select_vt(const NbModel& target_model, double sigma) {
  std::set<std::string> v_t;
  for (const auto& word : target_model.vocabulary) {
    double p_pos = word_conditional(target_model, word, Polarity::Positive);
    double p_neg = word_conditional(target_model, word, Polarity::Negative);
    // cross-multiplied form of p_pos/p_neg >= sigma or p_neg/p_pos >= sigma
    if (p_pos >= sigma * p_neg || p_neg >= sigma * p_pos) v_t.insert(word);
  }
  return v_t;
}

std::pair<std::set<std::string>, std::map<std::string, double>> select_vs(
    const KnowledgeBase& kb, int tau, const std::set<std::string>& vocabulary) {
  std::set<std::string> v_s;
  std::map<std::string, double> ratio;
  for (const auto& word : vocabulary) {
    auto m_of = [&](const std::map<std::string, int>& m) {
      auto it = m.find(word);
      return it == m.end() ? 0 : it->second;
    };
    int m_pos = m_of(kb.m_pos);
    int m_neg = m_of(kb.m_neg);
    if (m_pos >= tau || m_neg >= tau) {
      v_s.insert(word);
      ratio[word] = static_cast<double>(m_pos) / (m_pos + m_neg);
    }
  }
  return {std::move(v_s), std::move(ratio)};
}

double objective(const VirtualCounts& x, const std::vector<Document>& docs,
                 Priors priors, double lambda) {
  double total_pos = map_sum(x.x_pos);
  double total_neg = map_sum(x.x_neg);
  double value = 0.0;
  for (const auto& doc : docs) {
    auto [s_pos, s_neg] = detail::nb_log_scores(
        x.x_pos, x.x_neg, total_pos, total_neg, lambda, x.vocabulary.size(),
        x.vocabulary, priors.pos, priors.neg, doc);
    auto [p_pos, p_neg] = normalize_log_pair(s_pos, s_neg);
    value += doc.label == Polarity::Positive ? p_pos - p_neg : p_neg - p_pos;
  }
  return value;
}

double g_factor(const VirtualCounts& x, int doc_len, double lambda,
                int vocab_size) {
  if (doc_len < 0) throw OptimError("g_factor: negative document length");
  double base = lambda * vocab_size;
  double num = base + map_sum(x.x_pos);
  double den = base + map_sum(x.x_neg);
  if (num == 0.0 && den == 0.0) {
    throw OptimError("g_factor: lambda 0 with all-zero counts, ratio undefined");
  }
  double log_g = doc_len * (std::log(num) - std::log(den));
  log_g = std::clamp(log_g, -kMaxExpArg, kMaxExpArg);
  return std::exp(log_g);
}

std::map<std::string, GradPair> grad_doc(const VirtualCounts& x,
                                         const Document& doc, Priors priors,
                                         double lambda,
                                         const LscConfig& config) {
  double t_pos = lambda * static_cast<double>(x.vocabulary.size()) +
                 map_sum(x.x_pos);
  double t_neg = lambda * static_cast<double>(x.vocabulary.size()) +
                 map_sum(x.x_neg);

  // In-vocabulary words only; the length exponent counts the same tokens
  // the score does.
  std::vector<std::string> words;
  std::vector<std::tuple<double, double, int>> entries;
  int length = 0;
  for (const auto& [word, n] : doc.counts) {
    if (!x.vocabulary.contains(word)) continue;
    words.push_back(word);
    entries.emplace_back(detail::count_of(x.x_pos, word),
                         detail::count_of(x.x_neg, word), n);
    length += config.length_mode == LengthMode::TotalTokens ? n : 1;
  }

  auto [s_pos, s_neg] =
      data_log_scores(priors, lambda, t_pos, t_neg, length, entries);
  auto [p_pos, p_neg] = normalize_log_pair(s_pos, s_neg);
  double strength = 2.0 * p_pos * p_neg;

  std::map<std::string, GradPair> grads;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& [x_pos_u, x_neg_u, n] = entries[i];
    GradPair g = word_grad(doc.label, strength, lambda, t_pos, t_neg, length, n,
                           x_pos_u, x_neg_u);
    if (!std::isfinite(g.d_pos) || !std::isfinite(g.d_neg)) {
      throw OptimError("grad_doc: non-finite gradient for word '" + words[i] +
                       "' in document '" + doc.id + "'");
    }
    grads[words[i]] = g;
  }
  return grads;
}

std::pair<double, std::map<std::string, GradPair>> penalty_value_and_grad(
    const VirtualCounts& x, const PenaltySpec& spec, double alpha) {
  double value = 0.0;
  std::map<std::string, GradPair> grads;

  auto x_at = [&](const std::map<std::string, double>& m,
                  const std::string& w) {
    auto it = m.find(w);
    if (it == m.end()) {
      throw OptimError("penalty word '" + w + "' outside the count domain");
    }
    return it->second;
  };

  for (const auto& word : spec.v_t) {
    auto [a_pos, a_neg] = spec.anchors_t.at(word);
    double dp = x_at(x.x_pos, word) - a_pos;
    double dn = x_at(x.x_neg, word) - a_neg;
    value += 0.5 * alpha * (dp * dp + dn * dn);
    grads[word].d_pos += alpha * dp;
    grads[word].d_neg += alpha * dn;
  }
  for (const auto& word : spec.v_s) {
    auto [x0_pos, x0_neg] = spec.anchors_s.at(word);
    double r = spec.ratio.at(word);
    double dp = x_at(x.x_pos, word) - r * x0_pos;
    double dn = x_at(x.x_neg, word) - (1.0 - r) * x0_neg;
    value += 0.5 * alpha * (dp * dp + dn * dn);
    grads[word].d_pos += alpha * dp;
    grads[word].d_neg += alpha * dn;
  }
  return {value, std::move(grads)};
}

PenaltySpec build_penalty_spec(const NbModel& target_model,
                               const VirtualCounts& x0,
                               const KnowledgeBase& kb,
                               const LscConfig& config) {
  PenaltySpec spec;
  spec.v_t = select_vt(target_model, config.sigma);
  for (const auto& word : spec.v_t) {
    spec.anchors_t[word] = {detail::count_of(target_model.counts_pos, word),
                            detail::count_of(target_model.counts_neg, word)};
  }
  auto [v_s, ratio] = select_vs(kb, config.tau, x0.vocabulary);
  spec.v_s = std::move(v_s);
  spec.ratio = std::move(ratio);
  for (const auto& word : spec.v_s) {
    spec.anchors_s[word] = {detail::count_of(x0.x_pos, word),
                            detail::count_of(x0.x_neg, word)};
  }
  return spec;
}

namespace {

struct IndexedDoc {
  std::vector<std::pair<int, int>> words;  // (vocabulary index, count)
  int length_mode = 0;                     // exponent used by the data term
  int length_tokens = 0;                   // total tokens, for the objective
  Polarity label = Polarity::Positive;
  const std::string* id = nullptr;
};

// Objective over the indexed state; same quantity as objective() above.
double indexed_objective(const std::vector<IndexedDoc>& docs, Priors priors,
                         double lambda, const std::vector<double>& x_pos,
                         const std::vector<double>& x_neg, double sum_pos,
                         double sum_neg) {
  std::size_t v = x_pos.size();
  double t_pos = lambda * static_cast<double>(v) + sum_pos;
  double t_neg = lambda * static_cast<double>(v) + sum_neg;
  double log_t_pos = std::log(t_pos);
  double log_t_neg = std::log(t_neg);
  double value = 0.0;
  for (const auto& doc : docs) {
    double s_pos = std::log(priors.pos) - doc.length_tokens * log_t_pos;
    double s_neg = std::log(priors.neg) - doc.length_tokens * log_t_neg;
    for (const auto& [i, n] : doc.words) {
      s_pos += n * std::log(lambda + x_pos[i]);
      s_neg += n * std::log(lambda + x_neg[i]);
    }
    auto [p_pos, p_neg] = normalize_log_pair(s_pos, s_neg);
    value += doc.label == Polarity::Positive ? p_pos - p_neg : p_neg - p_pos;
  }
  return value;
}

}  // namespace

SgdResult sgd_train(const std::vector<Document>& target_train,
                    const KnowledgeBase& kb, const LscConfig& config) {
  validate(config);
  if (target_train.empty()) throw OptimError("sgd_train: empty training set");

  // Target-task vocabulary and empirical counts. The optimization
  // vocabulary adds the knowledge base's reliable words (domain frequency
  // >= tau) on top of the training vocabulary: a test document may lean on
  // sentiment words the target training split never saw, and those words
  // are classifiable only if the knowledge about them enters the counts.
  // With an empty knowledge base this reduces to the training vocabulary
  // and the whole model to plain NB at the starting point.
  std::set<std::string> train_vocab;
  for (const auto& doc : target_train) {
    for (const auto& [word, n] : doc.counts) train_vocab.insert(word);
  }
  NbModel target = train_nb(target_train, config.lambda, train_vocab);
  Priors priors{target.prior_pos, target.prior_neg};

  std::set<std::string> vocabulary = train_vocab;
  for (const auto& [word, m] : kb.m_pos) {
    if (m >= config.tau) vocabulary.insert(word);
  }
  for (const auto& [word, m] : kb.m_neg) {
    if (m >= config.tau) vocabulary.insert(word);
  }

  VirtualCounts x0 = init_virtual_counts(target.counts_pos, target.counts_neg,
                                         kb, vocabulary);
  PenaltySpec penalty = build_penalty_spec(target, x0, kb, config);

  // Indexed mirror of the state for the inner loop.
  std::vector<std::string> words(vocabulary.begin(), vocabulary.end());
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = static_cast<int>(i);

  std::vector<double> x_pos(words.size()), x_neg(words.size());
  double sum_pos = 0.0, sum_neg = 0.0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    x_pos[i] = x0.x_pos.at(words[i]);
    x_neg[i] = x0.x_neg.at(words[i]);
    sum_pos += x_pos[i];
    sum_neg += x_neg[i];
  }

  const double alpha = config.alpha;
  std::vector<char> in_vt(words.size(), 0), in_vs(words.size(), 0);
  std::vector<double> vt_pos(words.size(), 0.0), vt_neg(words.size(), 0.0);
  std::vector<double> vs_pos(words.size(), 0.0), vs_neg(words.size(), 0.0);
  for (const auto& word : penalty.v_t) {
    int i = index.at(word);
    in_vt[i] = 1;
    vt_pos[i] = penalty.anchors_t.at(word).first;
    vt_neg[i] = penalty.anchors_t.at(word).second;
  }
  for (const auto& word : penalty.v_s) {
    int i = index.at(word);
    in_vs[i] = 1;
    double r = penalty.ratio.at(word);
    vs_pos[i] = r * penalty.anchors_s.at(word).first;
    vs_neg[i] = (1.0 - r) * penalty.anchors_s.at(word).second;
  }
  auto penalty_grad = [&](int i, double xp, double xn) {
    GradPair g;
    if (in_vt[i]) {
      g.d_pos += alpha * (xp - vt_pos[i]);
      g.d_neg += alpha * (xn - vt_neg[i]);
    }
    if (in_vs[i]) {
      g.d_pos += alpha * (xp - vs_pos[i]);
      g.d_neg += alpha * (xn - vs_neg[i]);
    }
    return g;
  };

  std::vector<IndexedDoc> docs;
  docs.reserve(target_train.size());
  std::vector<char> word_in_some_doc(words.size(), 0);
  for (const auto& doc : target_train) {
    IndexedDoc d;
    d.label = doc.label;
    d.id = &doc.id;
    for (const auto& [word, n] : doc.counts) {
      int i = index.at(word);
      d.words.emplace_back(i, n);
      word_in_some_doc[i] = 1;
      d.length_tokens += n;
      d.length_mode += config.length_mode == LengthMode::TotalTokens ? n : 1;
    }
    docs.push_back(std::move(d));
  }

  // Penalty steps ride along with the documents containing the word; words
  // anchored but absent from every training document get one sweep step
  // per epoch instead. With the vocabulary built from the training set the
  // sweep list is empty, but callers of the pieces above can do otherwise.
  std::vector<int> sweep;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (!word_in_some_doc[i] && (in_vt[i] || in_vs[i])) {
      sweep.push_back(static_cast<int>(i));
    }
  }

  const double vocab_size = static_cast<double>(words.size());
  const double gamma = config.learn_rate;

  SgdResult result;
  result.priors = priors;
  double initial =
      indexed_objective(docs, priors, config.lambda, x_pos, x_neg, sum_pos, sum_neg);
  result.objective_trace.push_back(initial);

  std::vector<int> order(docs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  Rng shuffle_rng(config.shuffle_seed);

  // Pending per-document updates, applied after all of the document's
  // partials are computed at the pre-step state.
  std::vector<std::pair<int, std::pair<double, double>>> pending;

  int div_streak = 0;
  for (int epoch = 1; epoch <= config.max_epochs; ++epoch) {
    if (config.shuffle_docs) shuffle_rng.shuffle(order);

    for (int di : order) {
      const IndexedDoc& doc = docs[di];
      double t_pos = config.lambda * vocab_size + sum_pos;
      double t_neg = config.lambda * vocab_size + sum_neg;

      double s_pos = std::log(priors.pos) - doc.length_mode * std::log(t_pos);
      double s_neg = std::log(priors.neg) - doc.length_mode * std::log(t_neg);
      for (const auto& [i, n] : doc.words) {
        s_pos += n * std::log(config.lambda + x_pos[i]);
        s_neg += n * std::log(config.lambda + x_neg[i]);
      }
      auto [p_pos, p_neg] = normalize_log_pair(s_pos, s_neg);
      double strength = 2.0 * p_pos * p_neg;

      pending.clear();
      for (const auto& [i, n] : doc.words) {
        GradPair data = word_grad(doc.label, strength, config.lambda, t_pos,
                                  t_neg, doc.length_mode, n, x_pos[i], x_neg[i]);
        GradPair pen = penalty_grad(i, x_pos[i], x_neg[i]);
        // Ascend the data term, descend the penalties.
        double new_pos = x_pos[i] - gamma * (-data.d_pos + pen.d_pos);
        double new_neg = x_neg[i] - gamma * (-data.d_neg + pen.d_neg);
        if (!std::isfinite(new_pos) || !std::isfinite(new_neg)) {
          throw OptimError("sgd_train: non-finite update for word '" +
                           words[i] + "' in document '" + *doc.id + "'");
        }
        pending.emplace_back(i, std::make_pair(std::max(0.0, new_pos),
                                               std::max(0.0, new_neg)));
      }
      for (const auto& [i, vals] : pending) {
        sum_pos += vals.first - x_pos[i];
        sum_neg += vals.second - x_neg[i];
        x_pos[i] = vals.first;
        x_neg[i] = vals.second;
      }
    }

    for (int i : sweep) {
      GradPair pen = penalty_grad(i, x_pos[i], x_neg[i]);
      double new_pos = std::max(0.0, x_pos[i] - gamma * pen.d_pos);
      double new_neg = std::max(0.0, x_neg[i] - gamma * pen.d_neg);
      sum_pos += new_pos - x_pos[i];
      sum_neg += new_neg - x_neg[i];
      x_pos[i] = new_pos;
      x_neg[i] = new_neg;
    }

    double obj = indexed_objective(docs, priors, config.lambda, x_pos, x_neg,
                                   sum_pos, sum_neg);
    double prev = result.objective_trace.back();
    result.objective_trace.push_back(obj);
    result.epochs_run = epoch;

    if (std::abs(obj - prev) < config.epsilon) {
      result.converged = true;
      break;
    }
    if (obj < initial - 0.1 * std::max(std::abs(initial), 1.0)) {
      if (++div_streak >= 3) {
        std::ostringstream os;
        os << "sgd_train: objective fell more than 10% below its start for 3 "
              "consecutive epochs (start "
           << initial << ", now " << obj << ", epoch " << epoch << ")";
        throw DivergenceError(os.str(), result.objective_trace);
      }
    } else {
      div_streak = 0;
    }
  }

  result.counts.vocabulary = vocabulary;
  for (std::size_t i = 0; i < words.size(); ++i) {
    result.counts.x_pos[words[i]] = x_pos[i];
    result.counts.x_neg[words[i]] = x_neg[i];
  }
  return result;
}

Polarity classify(const VirtualCounts& x, Priors priors, const Document& doc,
                  double lambda) {
  auto [s_pos, s_neg] = detail::nb_log_scores(
      x.x_pos, x.x_neg, map_sum(x.x_pos), map_sum(x.x_neg), lambda,
      x.vocabulary.size(), x.vocabulary, priors.pos, priors.neg, doc);
  return s_pos >= s_neg ? Polarity::Positive : Polarity::Negative;
}

namespace {

std::string expect_line(std::istream& in, const std::string& context) {
  std::string line;
  if (!std::getline(in, line)) {
    throw OptimError("truncated counts file while reading " + context);
  }
  return line;
}

std::string header_value(const std::string& line, const std::string& key) {
  if (line.rfind(key + " ", 0) != 0) {
    throw OptimError("expected header '" + key + "', got '" + line + "'");
  }
  return line.substr(key.size() + 1);
}

}  // namespace

void save_virtual_counts(const SgdResult& result, const LscConfig& config,
                         const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw OptimError("cannot write counts file: " + path.string());

  out << "lsc-virtual-counts 1\n";
  out << "sigma " << format_double(config.sigma) << "\n";
  out << "tau " << config.tau << "\n";
  out << "alpha " << format_double(config.alpha) << "\n";
  out << "gamma " << format_double(config.learn_rate) << "\n";
  out << "lambda " << format_double(config.lambda) << "\n";
  out << "epsilon " << format_double(config.epsilon) << "\n";
  out << "max_epochs " << config.max_epochs << "\n";
  out << "length_mode "
      << (config.length_mode == LengthMode::TotalTokens ? "total-tokens"
                                                        : "distinct-words")
      << "\n";
  out << "prior_pos " << format_double(result.priors.pos) << "\n";
  out << "prior_neg " << format_double(result.priors.neg) << "\n";
  out << "epochs_run " << result.epochs_run << "\n";
  out << "converged " << (result.converged ? 1 : 0) << "\n";
  out << "vocab " << result.counts.vocabulary.size() << "\n";
  for (const auto& word : result.counts.vocabulary) {
    if (word.find_first_of("\t\n\r") != std::string::npos) {
      throw OptimError("cannot serialize word with tab/newline: '" + word + "'");
    }
    out << word << "\t"
        << format_double(detail::count_of(result.counts.x_pos, word)) << "\t"
        << format_double(detail::count_of(result.counts.x_neg, word)) << "\n";
  }
  if (!out) throw OptimError("I/O error writing " + path.string());
}

SgdResult load_virtual_counts(const std::filesystem::path& path,
                              LscConfig* config_out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw OptimError("cannot open counts file: " + path.string());

  if (expect_line(in, "magic") != "lsc-virtual-counts 1") {
    throw OptimError(path.string() + ": not an lsc-virtual-counts file");
  }
  LscConfig config;
  config.sigma = parse_double(header_value(expect_line(in, "sigma"), "sigma"));
  config.tau = static_cast<int>(parse_int(header_value(expect_line(in, "tau"), "tau")));
  config.alpha = parse_double(header_value(expect_line(in, "alpha"), "alpha"));
  config.learn_rate = parse_double(header_value(expect_line(in, "gamma"), "gamma"));
  config.lambda = parse_double(header_value(expect_line(in, "lambda"), "lambda"));
  config.epsilon = parse_double(header_value(expect_line(in, "epsilon"), "epsilon"));
  config.max_epochs = static_cast<int>(
      parse_int(header_value(expect_line(in, "max_epochs"), "max_epochs")));
  std::string mode = header_value(expect_line(in, "length_mode"), "length_mode");
  if (mode == "total-tokens") {
    config.length_mode = LengthMode::TotalTokens;
  } else if (mode == "distinct-words") {
    config.length_mode = LengthMode::DistinctWords;
  } else {
    throw OptimError(path.string() + ": unknown length_mode '" + mode + "'");
  }

  SgdResult result;
  result.priors.pos =
      parse_double(header_value(expect_line(in, "prior_pos"), "prior_pos"));
  result.priors.neg =
      parse_double(header_value(expect_line(in, "prior_neg"), "prior_neg"));
  result.epochs_run = static_cast<int>(
      parse_int(header_value(expect_line(in, "epochs_run"), "epochs_run")));
  result.converged =
      parse_int(header_value(expect_line(in, "converged"), "converged")) != 0;

  long long vocab = parse_int(header_value(expect_line(in, "vocab"), "vocab"));
  for (long long i = 0; i < vocab; ++i) {
    std::string line = expect_line(in, "word row");
    auto t1 = line.find('\t');
    auto t2 = line.find('\t', t1 == std::string::npos ? t1 : t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) {
      throw OptimError(path.string() + ": bad word row '" + line + "'");
    }
    std::string word = line.substr(0, t1);
    result.counts.vocabulary.insert(word);
    result.counts.x_pos[word] = parse_double(line.substr(t1 + 1, t2 - t1 - 1));
    result.counts.x_neg[word] = parse_double(line.substr(t2 + 1));
  }
  if (config_out) *config_out = config;
  return result;
}

}  // namespace lsc
