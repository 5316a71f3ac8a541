#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "lsc/types.hpp"

namespace lsc::detail {

// Shared log-score path for smoothed count maps. predict() on an NB model
// and classify() on virtual counts both route through here, so identical
// counts produce bit-identical scores and therefore identical argmax
// decisions. Words outside the vocabulary are skipped.
std::pair<double, double> nb_log_scores(
    const std::map<std::string, double>& counts_pos,
    const std::map<std::string, double>& counts_neg, double total_pos,
    double total_neg, double lambda, std::size_t vocab_size,
    const std::set<std::string>& vocabulary, double prior_pos,
    double prior_neg, const Document& doc);

inline double count_of(const std::map<std::string, double>& counts,
                       const std::string& word) {
  auto it = counts.find(word);
  return it == counts.end() ? 0.0 : it->second;
}

}  // namespace lsc::detail
