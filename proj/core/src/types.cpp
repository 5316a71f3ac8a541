#include "lsc/types.hpp"

namespace lsc {

const char* to_string(Polarity p) {
  return p == Polarity::Positive ? "pos" : "neg";
}

int total_tokens(const Document& doc) {
  int n = 0;
  for (const auto& [word, count] : doc.counts) n += count;
  return n;
}

int distinct_words(const Document& doc) {
  return static_cast<int>(doc.counts.size());
}

DomainDataset make_dataset(std::string name, std::vector<Document> documents) {
  DomainDataset ds;
  ds.name = std::move(name);
  ds.documents = std::move(documents);
  for (const auto& doc : ds.documents) {
    for (const auto& [word, count] : doc.counts) ds.vocabulary.insert(word);
  }
  return ds;
}

std::pair<int, int> class_counts(const std::vector<Document>& documents) {
  int pos = 0, neg = 0;
  for (const auto& doc : documents) {
    (doc.label == Polarity::Positive ? pos : neg)++;
  }
  return {pos, neg};
}

}  // namespace lsc
