#include "lsc/nb.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "lsc/numeric.hpp"
#include "score_util.hpp"

namespace lsc {

namespace detail {

std::pair<double, double> nb_log_scores(
    const std::map<std::string, double>& counts_pos,
    const std::map<std::string, double>& counts_neg, double total_pos,
    double total_neg, double lambda, std::size_t vocab_size,
    const std::set<std::string>& vocabulary, double prior_pos,
    double prior_neg, const Document& doc) {
  const double inf = std::numeric_limits<double>::infinity();
  double denom_pos = lambda * static_cast<double>(vocab_size) + total_pos;
  double denom_neg = lambda * static_cast<double>(vocab_size) + total_neg;
  double log_denom_pos = std::log(denom_pos);
  double log_denom_neg = std::log(denom_neg);

  double s_pos = std::log(prior_pos);
  double s_neg = std::log(prior_neg);
  for (const auto& [word, n] : doc.counts) {
    if (!vocabulary.contains(word)) continue;
    // lambda == 0 with an all-zero count map has no distribution to score;
    // such a class is impossible for any evidenced document.
    if (denom_pos <= 0.0) {
      s_pos = -inf;
    } else {
      s_pos += n * (std::log(lambda + count_of(counts_pos, word)) - log_denom_pos);
    }
    if (denom_neg <= 0.0) {
      s_neg = -inf;
    } else {
      s_neg += n * (std::log(lambda + count_of(counts_neg, word)) - log_denom_neg);
    }
  }
  return {s_pos, s_neg};
}

}  // namespace detail

void refresh_totals(NbModel& model) {
  model.total_pos = 0.0;
  model.total_neg = 0.0;
  for (const auto& [word, c] : model.counts_pos) model.total_pos += c;
  for (const auto& [word, c] : model.counts_neg) model.total_neg += c;
}

NbModel train_nb(const std::vector<Document>& documents, double lambda,
                 const std::set<std::string>& vocabulary) {
  if (documents.empty()) throw ModelError("train_nb: no documents");
  if (lambda < 0.0 || lambda > 1.0) {
    throw ModelError("train_nb: lambda must be in [0, 1]");
  }

  NbModel model;
  model.lambda = lambda;
  model.vocabulary = vocabulary;

  int n_pos = 0, n_neg = 0;
  for (const auto& doc : documents) {
    auto& counts =
        doc.label == Polarity::Positive ? model.counts_pos : model.counts_neg;
    (doc.label == Polarity::Positive ? n_pos : n_neg)++;
    for (const auto& [word, n] : doc.counts) {
      if (!vocabulary.contains(word)) {
        throw ModelError("train_nb: document word '" + word +
                         "' missing from vocabulary");
      }
      counts[word] += n;
    }
  }
  if (n_pos == 0 || n_neg == 0) {
    throw ModelError("train_nb: a class has zero documents, prior undefined");
  }

  refresh_totals(model);
  double total_docs = static_cast<double>(n_pos + n_neg);
  model.prior_pos = n_pos / total_docs;
  model.prior_neg = n_neg / total_docs;
  return model;
}

double word_conditional(const NbModel& model, const std::string& word,
                        Polarity c) {
  if (!model.vocabulary.contains(word)) {
    throw ModelError("word_conditional: '" + word + "' not in vocabulary");
  }
  double count = detail::count_of(
      c == Polarity::Positive ? model.counts_pos : model.counts_neg, word);
  double total = c == Polarity::Positive ? model.total_pos : model.total_neg;
  double denom =
      model.lambda * static_cast<double>(model.vocabulary.size()) + total;
  if (denom <= 0.0) {
    throw ModelError("word_conditional: zero denominator (lambda 0 with no counts)");
  }
  return (model.lambda + count) / denom;
}

std::pair<double, double> log_posterior(const NbModel& model,
                                        const Document& doc) {
  return detail::nb_log_scores(model.counts_pos, model.counts_neg,
                               model.total_pos, model.total_neg, model.lambda,
                               model.vocabulary.size(), model.vocabulary,
                               model.prior_pos, model.prior_neg, doc);
}

std::pair<double, double> posterior(const NbModel& model, const Document& doc) {
  auto [s_pos, s_neg] = log_posterior(model, doc);
  return normalize_log_pair(s_pos, s_neg);
}

Polarity predict(const NbModel& model, const Document& doc) {
  auto [s_pos, s_neg] = log_posterior(model, doc);
  return s_pos >= s_neg ? Polarity::Positive : Polarity::Negative;
}

bool operator==(const NbModel& a, const NbModel& b) {
  return a.lambda == b.lambda && a.vocabulary == b.vocabulary &&
         a.counts_pos == b.counts_pos && a.counts_neg == b.counts_neg &&
         a.total_pos == b.total_pos && a.total_neg == b.total_neg &&
         a.prior_pos == b.prior_pos && a.prior_neg == b.prior_neg;
}

namespace {

void check_word_serializable(const std::string& word) {
  if (word.find_first_of("\t\n\r") != std::string::npos) {
    throw ModelError("cannot serialize word with tab/newline: '" + word + "'");
  }
}

}  // namespace

void save_nb_model(const NbModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ModelError("cannot write model file: " + path.string());

  out << "lsc-nb-model 1\n";
  out << "lambda " << format_double(model.lambda) << "\n";
  out << "prior_pos " << format_double(model.prior_pos) << "\n";
  out << "prior_neg " << format_double(model.prior_neg) << "\n";
  out << "vocab " << model.vocabulary.size() << "\n";
  for (const auto& word : model.vocabulary) {
    check_word_serializable(word);
    out << word << "\t" << format_double(detail::count_of(model.counts_pos, word))
        << "\t" << format_double(detail::count_of(model.counts_neg, word))
        << "\n";
  }
  if (!out) throw ModelError("I/O error writing " + path.string());
}

namespace {

std::string expect_line(std::istream& in, const std::string& context) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ModelError("truncated model file while reading " + context);
  }
  return line;
}

// "key value" header line; returns the value part.
std::string header_value(const std::string& line, const std::string& key) {
  if (line.rfind(key + " ", 0) != 0) {
    throw ModelError("expected header '" + key + "', got '" + line + "'");
  }
  return line.substr(key.size() + 1);
}

}  // namespace

NbModel load_nb_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelError("cannot open model file: " + path.string());

  if (expect_line(in, "magic") != "lsc-nb-model 1") {
    throw ModelError(path.string() + ": not an lsc-nb-model file");
  }
  NbModel model;
  model.lambda = parse_double(header_value(expect_line(in, "lambda"), "lambda"));
  model.prior_pos =
      parse_double(header_value(expect_line(in, "prior_pos"), "prior_pos"));
  model.prior_neg =
      parse_double(header_value(expect_line(in, "prior_neg"), "prior_neg"));
  long long vocab = parse_int(header_value(expect_line(in, "vocab"), "vocab"));

  for (long long i = 0; i < vocab; ++i) {
    std::string line = expect_line(in, "word row");
    auto t1 = line.find('\t');
    auto t2 = line.find('\t', t1 == std::string::npos ? t1 : t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) {
      throw ModelError(path.string() + ": bad word row '" + line + "'");
    }
    std::string word = line.substr(0, t1);
    double n_pos = parse_double(line.substr(t1 + 1, t2 - t1 - 1));
    double n_neg = parse_double(line.substr(t2 + 1));
    model.vocabulary.insert(word);
    if (n_pos != 0.0) model.counts_pos[word] = n_pos;
    if (n_neg != 0.0) model.counts_neg[word] = n_neg;
  }
  refresh_totals(model);
  return model;
}

}  // namespace lsc
