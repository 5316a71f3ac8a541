#pragma once

#include <vector>

#include "lsc/types.hpp"

namespace lsc {

// F1 with `scored` as the positive-for-scoring class. Zero denominators
// give zero precision/recall, and F1 is 0 when precision + recall == 0.
double f1_score(const std::vector<Polarity>& predictions,
                const std::vector<Polarity>& gold, Polarity scored);

double f1_negative(const std::vector<Polarity>& predictions,
                   const std::vector<Polarity>& gold);

double f1_positive(const std::vector<Polarity>& predictions,
                   const std::vector<Polarity>& gold);

double accuracy(const std::vector<Polarity>& predictions,
                const std::vector<Polarity>& gold);

}  // namespace lsc
