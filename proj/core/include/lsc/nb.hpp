#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lsc/types.hpp"

namespace lsc {

// Multinomial Naive Bayes with additive smoothing. The word conditional is
//
//   P(w|c) = (lambda + N_{c,w}) / (lambda*|V| + sum_v N_{c,v})
//
// with lambda in [0,1]. Count maps are sparse; absent means zero. The
// totals are cached sums over the count maps and must stay consistent with
// them (train_nb and load_nb_model guarantee this).
struct NbModel {
  double lambda = 1.0;
  std::set<std::string> vocabulary;
  std::map<std::string, double> counts_pos;
  std::map<std::string, double> counts_neg;
  double total_pos = 0.0;
  double total_neg = 0.0;
  double prior_pos = 0.5;
  double prior_neg = 0.5;
};

// Recomputes the cached totals; for models assembled by hand.
void refresh_totals(NbModel& model);

// Trains on labeled documents. The vocabulary must cover every document
// word (it may be larger; extra words just get smoothed mass). Priors are
// class document fractions, so both classes must be present.
NbModel train_nb(const std::vector<Document>& documents, double lambda,
                 const std::set<std::string>& vocabulary);

// The smoothed conditional above. Throws ModelError for words outside the
// vocabulary: the vocabulary fixed at training time defines |V|.
double word_conditional(const NbModel& model, const std::string& word,
                        Polarity c);

// Unnormalized log scores (log prior + sum of count-weighted log
// conditionals). Document words outside the vocabulary are skipped.
std::pair<double, double> log_posterior(const NbModel& model,
                                        const Document& doc);

// Normalized class posteriors recovered via log-sum-exp.
std::pair<double, double> posterior(const NbModel& model, const Document& doc);

// Argmax of log_posterior; exact ties go to Positive.
Polarity predict(const NbModel& model, const Document& doc);

// Flat text model format: header (lambda, priors, |V|) plus one
// word / N_pos / N_neg row per vocabulary word. Decimal values round-trip
// exactly.
void save_nb_model(const NbModel& model, const std::filesystem::path& path);
NbModel load_nb_model(const std::filesystem::path& path);

bool operator==(const NbModel& a, const NbModel& b);

}  // namespace lsc
