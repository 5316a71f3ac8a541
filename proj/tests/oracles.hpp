#pragma once

// Test-side reference implementations. Everything here computes in plain
// probability space with no code shared with the library's log-space
// paths, so library results can be checked against an independent route.

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lsc/nb.hpp"
#include "lsc/optimizer.hpp"
#include "lsc/rng.hpp"
#include "lsc/types.hpp"

namespace oracle {

inline double count_of(const std::map<std::string, double>& m,
                       const std::string& w) {
  auto it = m.find(w);
  return it == m.end() ? 0.0 : it->second;
}

// Normalized (P(+|d), P(-|d)) by direct multiplication of smoothed
// conditionals. Only usable on short documents.
inline std::pair<double, double> posterior_counts(
    const std::map<std::string, double>& counts_pos,
    const std::map<std::string, double>& counts_neg,
    const std::set<std::string>& vocabulary, double lambda, double prior_pos,
    double prior_neg, const lsc::Document& doc) {
  double t_pos = lambda * static_cast<double>(vocabulary.size());
  double t_neg = t_pos;
  for (const auto& [w, v] : counts_pos) t_pos += v;
  for (const auto& [w, v] : counts_neg) t_neg += v;

  double mass_pos = prior_pos;
  double mass_neg = prior_neg;
  for (const auto& [word, n] : doc.counts) {
    if (!vocabulary.contains(word)) continue;
    mass_pos *= std::pow((lambda + count_of(counts_pos, word)) / t_pos, n);
    mass_neg *= std::pow((lambda + count_of(counts_neg, word)) / t_neg, n);
  }
  double total = mass_pos + mass_neg;
  if (total <= 0.0) return {0.5, 0.5};
  return {mass_pos / total, mass_neg / total};
}

inline std::pair<double, double> posterior(const lsc::NbModel& model,
                                           const lsc::Document& doc) {
  return posterior_counts(model.counts_pos, model.counts_neg, model.vocabulary,
                          model.lambda, model.prior_pos, model.prior_neg, doc);
}

inline lsc::Polarity predict(const lsc::NbModel& model,
                             const lsc::Document& doc) {
  auto [p_pos, p_neg] = oracle::posterior(model, doc);
  return p_pos >= p_neg ? lsc::Polarity::Positive : lsc::Polarity::Negative;
}

// Eq-2 style objective via the direct posterior.
inline double objective(const lsc::VirtualCounts& x,
                        const std::vector<lsc::Document>& docs,
                        lsc::Priors priors, double lambda) {
  double value = 0.0;
  for (const auto& doc : docs) {
    auto [p_pos, p_neg] = posterior_counts(x.x_pos, x.x_neg, x.vocabulary,
                                           lambda, priors.pos, priors.neg, doc);
    value += doc.label == lsc::Polarity::Positive ? p_pos - p_neg
                                                  : p_neg - p_pos;
  }
  return value;
}

inline lsc::Document make_doc(std::string id,
                              std::vector<std::pair<std::string, int>> words,
                              lsc::Polarity label) {
  lsc::Document doc;
  doc.id = std::move(id);
  doc.label = label;
  for (auto& [w, n] : words) doc.counts[w] += n;
  return doc;
}

// Small random NB training sets for property tests.
struct RandomInstance {
  std::vector<lsc::Document> docs;
  std::set<std::string> vocabulary;
  double lambda = 1.0;
};

inline RandomInstance random_instance(lsc::Rng& rng, int max_vocab = 8,
                                      int max_docs = 10, int max_tokens = 6) {
  RandomInstance inst;
  int vocab_size = 2 + static_cast<int>(rng.below(max_vocab - 1));
  std::vector<std::string> words;
  for (int i = 0; i < vocab_size; ++i) {
    words.push_back("w" + std::to_string(i));
    inst.vocabulary.insert(words.back());
  }
  int n_docs = 2 + static_cast<int>(rng.below(max_docs - 1));
  for (int i = 0; i < n_docs; ++i) {
    lsc::Document doc;
    doc.id = "doc" + std::to_string(i);
    // alternate labels so both classes are guaranteed
    doc.label = i % 2 == 0 ? lsc::Polarity::Positive : lsc::Polarity::Negative;
    int tokens = 1 + static_cast<int>(rng.below(max_tokens));
    for (int t = 0; t < tokens; ++t) {
      doc.counts[words[rng.below(words.size())]] += 1;
    }
    inst.docs.push_back(std::move(doc));
  }
  inst.lambda = rng.unit() < 0.5 ? 1.0 : 0.2 + 0.8 * rng.unit();
  return inst;
}

}  // namespace oracle
