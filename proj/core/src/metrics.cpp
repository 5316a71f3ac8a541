#include "lsc/metrics.hpp"

namespace lsc {

namespace {

void check_inputs(const std::vector<Polarity>& predictions,
                  const std::vector<Polarity>& gold) {
  if (predictions.empty() || gold.empty()) {
    throw ProtocolError("metric on empty prediction set");
  }
  if (predictions.size() != gold.size()) {
    throw ProtocolError("metric inputs differ in length");
  }
}

}  // namespace

double f1_score(const std::vector<Polarity>& predictions,
                const std::vector<Polarity>& gold, Polarity scored) {
  check_inputs(predictions, gold);
  long tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    bool pred_hit = predictions[i] == scored;
    bool gold_hit = gold[i] == scored;
    if (pred_hit && gold_hit) ++tp;
    if (pred_hit && !gold_hit) ++fp;
    if (!pred_hit && gold_hit) ++fn;
  }
  double precision = tp + fp == 0 ? 0.0 : static_cast<double>(tp) / (tp + fp);
  double recall = tp + fn == 0 ? 0.0 : static_cast<double>(tp) / (tp + fn);
  if (precision + recall == 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

double f1_negative(const std::vector<Polarity>& predictions,
                   const std::vector<Polarity>& gold) {
  return f1_score(predictions, gold, Polarity::Negative);
}

double f1_positive(const std::vector<Polarity>& predictions,
                   const std::vector<Polarity>& gold) {
  return f1_score(predictions, gold, Polarity::Positive);
}

double accuracy(const std::vector<Polarity>& predictions,
                const std::vector<Polarity>& gold) {
  check_inputs(predictions, gold);
  long correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (predictions[i] == gold[i]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(gold.size());
}

}  // namespace lsc
